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

#ifndef GQD_MEASUREMENT_HPP
#define GQD_MEASUREMENT_HPP

#include <array>

#include "gqd/linalg.hpp"

namespace gqd {

/// Projective measurement on qubit A along the Bloch axis
/// u = (sin theta cos phi, sin theta sin phi, cos theta), with projectors
/// Pi_{1,2} = (I +- u.sigma) / 2.
struct MeasurementDirection {
    double theta = 0.0;  // polar angle in [0, pi]
    double phi = 0.0;    // azimuth in [0, 2 pi)

    std::array<double, 3> axis() const;
    Mat2 u_dot_sigma() const;
    std::array<Mat2, 2> projectors() const;
};

/// Folds any (theta, phi) into theta in [0, pi/2], phi in [0, 2 pi) using the
/// u -> -u symmetry (the two projectors just swap labels).
MeasurementDirection canonicalize(MeasurementDirection dir);

/// Angle of the measurement basis vector cos(a)|1> + e^{i phi} sin(a)|0>
/// closest to |0>, in [pi/4, pi/2]. A sigma_z measurement reads pi/2 and any
/// equatorial measurement reads pi/4. This is the angle trajectories report
/// and the sudden-change detector tracks.
double measurement_angle(const MeasurementDirection &dir);

/// sum_k (Pi_k (x) I) M (Pi_k (x) I) for a generic 4x4 operator M.
Mat4 dephase_on_a(const Mat4 &m, const MeasurementDirection &dir);

}  // namespace gqd

#endif  // GQD_MEASUREMENT_HPP
