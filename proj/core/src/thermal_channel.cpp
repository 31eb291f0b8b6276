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

#include "gqd/thermal_channel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "gqd/error.hpp"

namespace gqd {
namespace {

void require_non_negative_time(double t) {
    if (!(t >= 0.0)) {
        std::ostringstream os;
        os << "time must be non-negative, got " << t;
        throw Error(ErrorCode::NegativeTime, os.str());
    }
}

void require_single_qubit_state(const Mat2 &rho) {
    bool ok = rho.allFinite() && hermiticity_defect(rho) <= 1e-12 &&
              std::abs(rho.trace().real() - 1.0) <= 1e-12;
    if (ok) {
        Eigen::SelfAdjointEigenSolver<Mat2> solver((rho + rho.adjoint()) * 0.5, Eigen::EigenvaluesOnly);
        ok = solver.eigenvalues()[0] >= -kPsdFloor;
    }
    if (!ok) {
        throw Error(ErrorCode::InvalidState, "input is not a valid single-qubit density matrix");
    }
}

// The L rho L^dagger - {L^dagger L, rho}/2 dissipator for one jump operator.
template <int N>
ComplexMatrix<N> dissipator(const ComplexMatrix<N> &jump, const ComplexMatrix<N> &rho) {
    ComplexMatrix<N> jdj = jump.adjoint() * jump;
    return jump * rho * jump.adjoint() - 0.5 * (jdj * rho + rho * jdj);
}

struct PairJumps {
    std::vector<Mat4> operators;  // prescaled by sqrt(gamma_S)
};

PairJumps pair_jumps(const ReservoirConfig &config) {
    PairJumps jumps;
    const Mat2 id = Mat2::Identity();
    for (Qubit qubit : {Qubit::A, Qubit::B}) {
        if (!config.exposes(qubit)) {
            continue;
        }
        LindbladGenerator gen{config.nbar, config.gamma(qubit)};
        double scale = std::sqrt(gen.gamma);
        for (const Mat2 &op : {gen.decay_operator(), gen.excitation_operator()}) {
            Mat4 embedded = qubit == Qubit::A ? kron(op, id) : kron(id, op);
            jumps.operators.push_back(scale * embedded);
        }
    }
    return jumps;
}

Mat4 pair_rhs(const Mat4 &rho, const PairJumps &jumps) {
    Mat4 out = Mat4::Zero();
    for (const Mat4 &jump : jumps.operators) {
        out += dissipator<4>(jump, rho);
    }
    return out;
}

}  // namespace

void ReservoirConfig::validate() const {
    if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
        throw Error(ErrorCode::ValidationError, "nbar must be a finite non-negative number");
    }
    if (!(gamma_a > 0.0) || !(gamma_b > 0.0) || !std::isfinite(gamma_a) || !std::isfinite(gamma_b)) {
        throw Error(ErrorCode::ValidationError, "damping rates must be finite and positive");
    }
}

bool ReservoirConfig::exposes(Qubit qubit) const {
    switch (topology) {
        case Topology::TwoSided:
            return true;
        case Topology::OneSidedA:
            return qubit == Qubit::A;
        case Topology::OneSidedB:
            return qubit == Qubit::B;
    }
    return false;
}

Mat2 sigma_minus() {
    Mat2 s = Mat2::Zero();
    s(1, 0) = 1.0;
    return s;
}

Mat2 sigma_plus() {
    Mat2 s = Mat2::Zero();
    s(0, 1) = 1.0;
    return s;
}

Mat2 LindbladGenerator::decay_operator() const { return std::sqrt(nbar + 1.0) * sigma_minus(); }

Mat2 LindbladGenerator::excitation_operator() const { return std::sqrt(nbar) * sigma_plus(); }

double decay_factor(const ReservoirConfig &config, Qubit qubit, double t) {
    require_non_negative_time(t);
    if (!config.exposes(qubit)) {
        return 1.0;
    }
    return std::exp(-(2.0 * config.nbar + 1.0) * config.gamma(qubit) * t / 2.0);
}

ChannelWeights thermal_weights(double nbar, double p) {
    if (!(nbar >= 0.0)) {
        throw Error(ErrorCode::DomainError, "nbar must be non-negative");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::DomainError, "decay factor p must lie in [0, 1]");
    }
    double denom = 2.0 * nbar + 1.0;
    double p2 = p * p;
    return ChannelWeights{p, (nbar + (nbar + 1.0) * p2) / denom, nbar * (1.0 - p2) / denom};
}

ChannelWeights channel_weights(const ReservoirConfig &config, Qubit qubit, double t) {
    return thermal_weights(config.nbar, decay_factor(config, qubit, t));
}

Mat2 evolve_single_qubit(const Mat2 &rho0, const ChannelWeights &weights) {
    require_single_qubit_state(rho0);
    Mat2 out;
    out(0, 0) = weights.q1 * rho0(0, 0) + weights.q2 * rho0(1, 1);
    out(0, 1) = weights.p * rho0(0, 1);
    out(1, 0) = weights.p * rho0(1, 0);
    out(1, 1) = 1.0 - out(0, 0);
    return out;
}

DensityMatrix4 evolve_pair(const DensityMatrix4 &rho0, const ReservoirConfig &config, double t) {
    require_non_negative_time(t);
    config.validate();
    const ChannelWeights a = channel_weights(config, Qubit::A, t);
    const ChannelWeights b = channel_weights(config, Qubit::B, t);
    const Mat4 &r = rho0.matrix();

    // Element names below are one-based to match the usual rho_ij notation.
    const Complex r11 = r(0, 0), r22 = r(1, 1), r33 = r(2, 2), r44 = r(3, 3);
    const Complex r12 = r(0, 1), r13 = r(0, 2), r14 = r(0, 3);
    const Complex r23 = r(1, 2), r24 = r(1, 3), r34 = r(2, 3);

    Mat4 e = Mat4::Zero();
    e(0, 0) = a.q1 * b.q1 * r11 + a.q1 * b.q2 * r22 + a.q2 * b.q1 * r33 + a.q2 * b.q2 * r44;
    e(1, 1) = a.q1 * ((1.0 - b.q1) * r11 + (1.0 - b.q2) * r22) +
              a.q2 * ((1.0 - b.q1) * r33 + (1.0 - b.q2) * r44);
    e(2, 2) = (1.0 - a.q1) * (b.q1 * r11 + b.q2 * r22) + (1.0 - a.q2) * (b.q1 * r33 + b.q2 * r44);
    e(3, 3) = 1.0 - e(0, 0).real() - e(1, 1).real() - e(2, 2).real();
    for (int k = 0; k < 4; ++k) {
        e(k, k) = e(k, k).real();
    }

    e(0, 1) = a.q1 * b.p * r12 + a.q2 * b.p * r34;
    e(0, 2) = b.q1 * a.p * r13 + b.q2 * a.p * r24;
    e(0, 3) = a.p * b.p * r14;
    e(1, 2) = a.p * b.p * r23;
    e(1, 3) = a.p * (1.0 - b.q1) * r13 + a.p * (1.0 - b.q2) * r24;
    e(2, 3) = (1.0 - a.q1) * b.p * r12 + (1.0 - a.q2) * b.p * r34;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            e(j, i) = std::conj(e(i, j));
        }
    }
    return DensityMatrix4::from_matrix(e);
}

Mat2 lindblad_rhs(const Mat2 &rho, const LindbladGenerator &generator) {
    Mat2 out = dissipator<2>(generator.decay_operator(), rho) +
               dissipator<2>(generator.excitation_operator(), rho);
    return generator.gamma * out;
}

Mat4 lindblad_rhs(const Mat4 &rho, const ReservoirConfig &config) {
    return pair_rhs(rho, pair_jumps(config));
}

DensityMatrix4 integrate_master_equation(const DensityMatrix4 &rho0, const ReservoirConfig &config,
                                         double t, double dt) {
    require_non_negative_time(t);
    config.validate();
    double gamma_max = std::max(config.exposes(Qubit::A) ? config.gamma_a : 0.0,
                                config.exposes(Qubit::B) ? config.gamma_b : 0.0);
    if (!(dt > 0.0) || dt > 1e-3 / gamma_max * (1.0 + 1e-12)) {
        std::ostringstream os;
        os << "step " << dt << " exceeds 1e-3 / gamma_max = " << 1e-3 / gamma_max;
        throw Error(ErrorCode::StepTooLarge, os.str());
    }
    if (t == 0.0) {
        return rho0;
    }
    const PairJumps jumps = pair_jumps(config);
    const long steps = static_cast<long>(std::ceil(t / dt - 1e-9));
    const double h = t / static_cast<double>(steps);
    Mat4 rho = rho0.matrix();
    for (long n = 0; n < steps; ++n) {
        Mat4 k1 = pair_rhs(rho, jumps);
        Mat4 k2 = pair_rhs(rho + 0.5 * h * k1, jumps);
        Mat4 k3 = pair_rhs(rho + 0.5 * h * k2, jumps);
        Mat4 k4 = pair_rhs(rho + h * k3, jumps);
        rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    // Re-normalize away the O(steps * eps) trace drift before validation.
    rho /= rho.trace().real();
    return DensityMatrix4::from_matrix((rho + rho.adjoint()) * 0.5);
}

}  // namespace gqd
