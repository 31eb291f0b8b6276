// Copyright 2026 The gqd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gqd/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gqd {

std::array<double, 3> MeasurementDirection::axis() const {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

Mat2 MeasurementDirection::u_dot_sigma() const {
    auto u = axis();
    return u[0] * pauli(1) + u[1] * pauli(2) + u[2] * pauli(3);
}

std::array<Mat2, 2> MeasurementDirection::projectors() const {
    Mat2 us = u_dot_sigma();
    Mat2 id = Mat2::Identity();
    return {(id + us) * 0.5, (id - us) * 0.5};
}

MeasurementDirection canonicalize(MeasurementDirection dir) {
    constexpr double pi = std::numbers::pi;
    auto u = dir.axis();
    if (u[2] < 0.0) {
        u = {-u[0], -u[1], -u[2]};
    }
    double theta = std::acos(std::clamp(u[2], -1.0, 1.0));
    double phi = std::atan2(u[1], u[0]);
    if (std::hypot(u[0], u[1]) < 1e-15) {
        phi = 0.0;
    }
    if (phi < 0.0) {
        phi += 2.0 * pi;
    }
    if (phi >= 2.0 * pi) {
        phi -= 2.0 * pi;
    }
    return {theta, phi};
}

double measurement_angle(const MeasurementDirection &dir) {
    return (std::numbers::pi - canonicalize(dir).theta) / 2.0;
}

Mat4 dephase_on_a(const Mat4 &m, const MeasurementDirection &dir) {
    Mat4 u = kron(dir.u_dot_sigma(), Mat2::Identity());
    Mat4 out = (m + u * m * u) * 0.5;
    return out;
}

}  // namespace gqd
