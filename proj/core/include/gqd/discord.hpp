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

#ifndef GQD_DISCORD_HPP
#define GQD_DISCORD_HPP

// Distance-based geometric quantum discords of a two-qubit state, each
// defined as the distance from rho to the nearest state that is classical on
// qubit A:
//
//   TDD  D_T = min ||rho - chi||_1
//   HDD  D_H = 2 min ||sqrt(rho) - sqrt(chi)||_2^2   (sqrt(chi) dephased sqrt(rho))
//   BDD  D_B = sqrt((2 + sqrt 2) min (1 - sqrt F(rho, chi)))
//
// The constants make all three equal to 1 on a Bell state. Production entry
// points are tdd_x_state, hdd_closed_form and bdd_via_fidelity; the *_oracle
// functions minimize the definitions directly and exist to check them.

#include <string_view>

#include "gqd/linalg.hpp"
#include "gqd/measurement.hpp"
#include "gqd/sphere_search.hpp"

namespace gqd {

enum class Measure { TDD, HDD, BDD };

std::string_view measure_name(Measure measure);  // "tdd", "hdd", "bdd"
Measure parse_measure(std::string_view name);    // throws Error(ValidationError)

struct DiscordResult {
    double value = 0.0;
    MeasurementDirection optimal_direction;
    Measure measure = Measure::TDD;
    /// Optimum shared by measurement directions with clearly different
    /// measurement_angle; the reported direction is then the one closest to z.
    bool tie = false;
};

/// Search used by bdd_via_fidelity.
inline constexpr SphereSearchOptions kClosedFormSearch{65, 128, 3, 1e-10, 10000, 1e-12, 0.15};
/// Finer search used by the brute-force oracles.
inline constexpr SphereSearchOptions kOracleSearch{129, 256, 3, 1e-12, 10000, 1e-12, 0.15};

/// sum_k (Pi_k (x) I) rho (Pi_k (x) I).
DensityMatrix4 measured_state(const DensityMatrix4 &rho, const MeasurementDirection &dir);

/// Every element off the diagonal and anti-diagonal is below tolerance.
bool is_x_state(const DensityMatrix4 &rho, double tolerance = 1e-10);

struct XStateParams {
    double xi1 = 0.0;  // 2(|rho_23| + |rho_14|)
    double xi2 = 0.0;  // 2(|rho_23| - |rho_14|)
    double xi3 = 0.0;  // 1 - 2(rho_22 + rho_33)
    double x_a3 = 0.0; // 2(rho_11 + rho_22) - 1
};

/// Throws Error(NotXState).
XStateParams x_state_params(const DensityMatrix4 &rho);

/// Closed-form trace-distance discord of an X state. When the denominator
/// vanishes (xi_max = xi_min and xi1^2 = xi2^2) the continuous limit |xi1| is
/// returned. The reported direction is the better of the z axis and the best
/// of 16 equatorial axes; it is informational only.
DiscordResult tdd_x_state(const DensityMatrix4 &rho);

/// 2 p_a p_b sqrt(alpha^2 (1 - alpha^2)): the trace-distance discord of the
/// evolved alpha|11> + beta|00> family.
double tdd_analytic(double alpha_sq, double p_a, double p_b);

/// D_H = 2 (1 - sum_j c_0j^2 - z_max) from the Pauli coefficients of sqrt(rho),
/// z_max being the top eigenvalue of Z Z^T with Z = c(1..3, :). The optimal
/// axis is the corresponding eigenvector.
DiscordResult hdd_closed_form(const DensityMatrix4 &rho);

/// (1 - tr Lambda + 2 (lambda_1 + lambda_2)) / 2 with
/// Lambda = sqrt(rho) (u.sigma (x) I) sqrt(rho) and lambda_k its two largest
/// eigenvalues: the largest fidelity between rho and a state that is
/// classical in the basis of u.
double bdd_objective(const DensityMatrix4 &rho, const MeasurementDirection &dir);

/// D_B from the maximum of bdd_objective over the sphere.
DiscordResult bdd_via_fidelity(const DensityMatrix4 &rho,
                               const SphereSearchOptions &search = kClosedFormSearch);

/// ||rho - measured_state(rho, dir)||_1
double tdd_objective(const DensityMatrix4 &rho, const MeasurementDirection &dir);

/// 2 ||sqrt(rho) - dephased sqrt(rho)||_2^2
double hdd_objective(const DensityMatrix4 &rho, const MeasurementDirection &dir);

/// max sqrt F(rho, sum_k Pi_k (x) sigma_k) over unnormalized qubit-B states
/// sigma_k with total trace 1, for the projectors Pi_k of dir. Solved by
/// alternating maximization of Re tr(U sqrt(chi) sqrt(rho)) over the unitary U
/// (polar factor) and sqrt(sigma_k) (normalized positive parts).
double bdd_fixed_direction_root_fidelity(const DensityMatrix4 &rho, const MeasurementDirection &dir);

DiscordResult tdd_oracle(const DensityMatrix4 &rho, const SphereSearchOptions &search = kOracleSearch);
DiscordResult hdd_oracle(const DensityMatrix4 &rho, const SphereSearchOptions &search = kOracleSearch);
/// Minimizes over every state classical on A, via bdd_fixed_direction_root_fidelity.
DiscordResult bdd_oracle(const DensityMatrix4 &rho, const SphereSearchOptions &search = kOracleSearch);

/// Bures expression restricted to chi = measured_state(rho, dir). This is an
/// upper bound on D_B; it is not the discord itself because the Bures-closest
/// classical state is generally not the dephased rho.
DiscordResult bdd_measured_state_bound(const DensityMatrix4 &rho,
                                       const SphereSearchOptions &search = kOracleSearch);

/// Dispatch on measure to the production evaluation.
DiscordResult compute_discord(const DensityMatrix4 &rho, Measure measure);
DiscordResult compute_discord_oracle(const DensityMatrix4 &rho, Measure measure);

}  // namespace gqd

#endif  // GQD_DISCORD_HPP
