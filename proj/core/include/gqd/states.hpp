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

#ifndef GQD_STATES_HPP
#define GQD_STATES_HPP

#include "gqd/linalg.hpp"

namespace gqd {

/// |Psi> = alpha|11> + sqrt(1 - alpha^2)|00>, parameterized by alpha^2 in [0, 1].
DensityMatrix4 psi_alpha_state(double alpha_sq);

/// (|11> + |00>)/sqrt(2), the alpha^2 = 1/2 member of the family above.
DensityMatrix4 bell_state();

DensityMatrix4 maximally_mixed_state();

/// Projector onto a computational basis vector, index 0 = |11> ... 3 = |00>.
DensityMatrix4 basis_state(int index);

/// Fixed point of a single qubit in a reservoir with mean photon number nbar:
/// diag(nbar, nbar + 1) / (2 nbar + 1) in the (|1>, |0>) basis.
Mat2 thermal_qubit_state(double nbar);

DensityMatrix4 product_state(const Mat2 &rho_a, const Mat2 &rho_b);

Mat2 reduced_state_a(const Mat4 &rho);
Mat2 reduced_state_b(const Mat4 &rho);

}  // namespace gqd

#endif  // GQD_STATES_HPP
