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

#ifndef GQD_THERMAL_CHANNEL_HPP
#define GQD_THERMAL_CHANNEL_HPP

// Two non-interacting qubits, each optionally coupled to its own Markovian
// thermal reservoir. The closed-form channel (thermal_weights, evolve_*) is
// the production path; lindblad_rhs and integrate_master_equation integrate
// the master equation directly and serve as its independent check.

#include "gqd/linalg.hpp"

namespace gqd {

enum class Topology {
    TwoSided,   // both qubits exposed
    OneSidedA,  // only qubit A exposed, p_B = 1
    OneSidedB,  // only qubit B exposed, p_A = 1
};

enum class Qubit { A, B };

struct ReservoirConfig {
    double nbar = 0.0;    // mean thermal photon number
    double gamma_a = 1.0; // damping rate of qubit A
    double gamma_b = 1.0; // damping rate of qubit B
    Topology topology = Topology::TwoSided;

    /// Throws Error(ValidationError) on nbar < 0 or non-positive rates.
    void validate() const;

    bool exposes(Qubit qubit) const;
    double gamma(Qubit qubit) const { return qubit == Qubit::A ? gamma_a : gamma_b; }
};

struct ChannelWeights {
    double p = 1.0;
    double q1 = 1.0;
    double q2 = 0.0;
};

/// Jump operators sqrt(nbar+1) sigma^- (decay, |1> -> |0>) and
/// sqrt(nbar) sigma^+ (excitation) acting at rate gamma.
struct LindbladGenerator {
    double nbar = 0.0;
    double gamma = 1.0;

    Mat2 decay_operator() const;
    Mat2 excitation_operator() const;
};

/// sigma^- = |0><1| and sigma^+ = |1><0| in the (|1>, |0>) basis.
Mat2 sigma_minus();
Mat2 sigma_plus();

/// exp(-(2 nbar + 1) gamma_S t / 2) for an exposed qubit, exactly 1 for the
/// shielded qubit of a one-sided topology.
double decay_factor(const ReservoirConfig &config, Qubit qubit, double t);

/// q1 = (nbar + (nbar + 1) p^2) / (2 nbar + 1), q2 = nbar (1 - p^2) / (2 nbar + 1).
ChannelWeights thermal_weights(double nbar, double p);

ChannelWeights channel_weights(const ReservoirConfig &config, Qubit qubit, double t);

Mat2 evolve_single_qubit(const Mat2 &rho0, const ChannelWeights &weights);

/// Closed-form two-qubit evolution. The ten independent elements are updated
/// element by element and the rest are filled in by Hermiticity; rho_44 is
/// taken as 1 - rho_11 - rho_22 - rho_33.
DensityMatrix4 evolve_pair(const DensityMatrix4 &rho0, const ReservoirConfig &config, double t);

/// d rho / dt = gamma sum_k (L_k rho L_k^dagger - {L_k^dagger L_k, rho} / 2).
Mat2 lindblad_rhs(const Mat2 &rho, const LindbladGenerator &generator);

/// Two-qubit generator: sum of the single-qubit generators of the exposed
/// qubits acting on their own tensor factor.
Mat4 lindblad_rhs(const Mat4 &rho, const ReservoirConfig &config);

/// Classical fixed-step RK4. The step is shrunk so an integer number of steps
/// lands exactly on t. Throws Error(StepTooLarge) if dt > 1e-3 / gamma_max.
DensityMatrix4 integrate_master_equation(const DensityMatrix4 &rho0, const ReservoirConfig &config,
                                         double t, double dt);

}  // namespace gqd

#endif  // GQD_THERMAL_CHANNEL_HPP
