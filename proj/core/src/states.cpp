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

#include "gqd/states.hpp"

#include <cmath>

#include "gqd/error.hpp"

namespace gqd {

DensityMatrix4 psi_alpha_state(double alpha_sq) {
    if (!(alpha_sq >= 0.0 && alpha_sq <= 1.0)) {
        throw Error(ErrorCode::DomainError, "alpha^2 must lie in [0, 1]");
    }
    double alpha = std::sqrt(alpha_sq);
    double beta = std::sqrt(1.0 - alpha_sq);
    Mat4 m = Mat4::Zero();
    m(0, 0) = alpha_sq;
    m(3, 3) = 1.0 - alpha_sq;
    m(0, 3) = alpha * beta;
    m(3, 0) = alpha * beta;
    return DensityMatrix4::from_matrix(m);
}

DensityMatrix4 bell_state() { return psi_alpha_state(0.5); }

DensityMatrix4 maximally_mixed_state() {
    return DensityMatrix4::from_matrix(Mat4::Identity() * 0.25);
}

DensityMatrix4 basis_state(int index) {
    if (index < 0 || index > 3) {
        throw Error(ErrorCode::DomainError, "basis index must be in 0..3");
    }
    Mat4 m = Mat4::Zero();
    m(index, index) = 1.0;
    return DensityMatrix4::from_matrix(m);
}

Mat2 thermal_qubit_state(double nbar) {
    if (!(nbar >= 0.0)) {
        throw Error(ErrorCode::DomainError, "nbar must be non-negative");
    }
    Mat2 m = Mat2::Zero();
    m(0, 0) = nbar / (2.0 * nbar + 1.0);
    m(1, 1) = (nbar + 1.0) / (2.0 * nbar + 1.0);
    return m;
}

DensityMatrix4 product_state(const Mat2 &rho_a, const Mat2 &rho_b) {
    return DensityMatrix4::from_matrix(kron(rho_a, rho_b));
}

Mat2 reduced_state_a(const Mat4 &rho) {
    Mat2 out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out(i, j) = rho(2 * i, 2 * j) + rho(2 * i + 1, 2 * j + 1);
        }
    }
    return out;
}

Mat2 reduced_state_b(const Mat4 &rho) {
    Mat2 out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out(i, j) = rho(i, j) + rho(2 + i, 2 + j);
        }
    }
    return out;
}

}  // namespace gqd
