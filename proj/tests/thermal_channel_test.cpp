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

#include <cmath>

#include "gqd/error.hpp"
#include "gqd/states.hpp"
#include "gtest/gtest.h"
#include "random_states.hpp"

using namespace gqd;
using gqd::testing::max_abs_diff;

namespace {

template <typename F>
ErrorCode code_of(F &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "expected gqd::Error";
    return ErrorCode::IoError;
}

// Independent single-qubit RK4 built only on lindblad_rhs.
Mat2 integrate_single(Mat2 rho, const LindbladGenerator &gen, double t, double dt) {
    long steps = static_cast<long>(std::ceil(t / dt));
    double h = t / steps;
    for (long n = 0; n < steps; ++n) {
        Mat2 k1 = lindblad_rhs(rho, gen);
        Mat2 k2 = lindblad_rhs(Mat2(rho + 0.5 * h * k1), gen);
        Mat2 k3 = lindblad_rhs(Mat2(rho + 0.5 * h * k2), gen);
        Mat2 k4 = lindblad_rhs(Mat2(rho + h * k3), gen);
        rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return rho;
}

Mat2 ket_one() {
    Mat2 m = Mat2::Zero();
    m(0, 0) = 1.0;
    return m;
}

Mat2 ket_zero() {
    Mat2 m = Mat2::Zero();
    m(1, 1) = 1.0;
    return m;
}

}  // namespace

TEST(decay_factor, examples) {
    ReservoirConfig two{0.0, 1.0, 1.0, Topology::TwoSided};
    EXPECT_EQ(decay_factor(two, Qubit::A, 0.0), 1.0);
    EXPECT_NEAR(decay_factor(two, Qubit::B, 1.0), std::exp(-0.5), 1e-15);
    ReservoirConfig one_a{0.6, 1.0, 1.0, Topology::OneSidedA};
    EXPECT_EQ(decay_factor(one_a, Qubit::B, 3.7), 1.0);
    EXPECT_NEAR(decay_factor(one_a, Qubit::A, 0.5), std::exp(-2.2 * 0.5 / 2.0), 1e-15);
    ReservoirConfig one_b{0.6, 1.0, 2.0, Topology::OneSidedB};
    EXPECT_EQ(decay_factor(one_b, Qubit::A, 3.7), 1.0);
    EXPECT_NEAR(decay_factor(one_b, Qubit::B, 0.5), std::exp(-2.2 * 2.0 * 0.5 / 2.0), 1e-15);
    EXPECT_EQ(code_of([&] { decay_factor(two, Qubit::A, -1e-3); }), ErrorCode::NegativeTime);
}

TEST(thermal_weights, examples) {
    for (double nbar : {0.0, 0.6, 5.0}) {
        ChannelWeights w = thermal_weights(nbar, 1.0);
        EXPECT_NEAR(w.q1, 1.0, 1e-15);
        EXPECT_NEAR(w.q2, 0.0, 1e-15);
    }
    ChannelWeights zero_t = thermal_weights(0.0, 0.4);
    EXPECT_NEAR(zero_t.q1, 0.16, 1e-15);
    EXPECT_EQ(zero_t.q2, 0.0);
    ChannelWeights limit = thermal_weights(0.6, 0.0);
    EXPECT_NEAR(limit.q1, 0.6 / 2.2, 1e-15);
    EXPECT_NEAR(limit.q2, 0.6 / 2.2, 1e-15);
    EXPECT_NEAR(limit.q1, 0.272727, 1e-6);
    EXPECT_EQ(code_of([] { thermal_weights(0.6, 1.2); }), ErrorCode::DomainError);
    EXPECT_EQ(code_of([] { thermal_weights(0.6, -0.1); }), ErrorCode::DomainError);
    EXPECT_EQ(code_of([] { thermal_weights(-0.1, 0.5); }), ErrorCode::DomainError);
}

TEST(thermal_weights, stay_in_unit_interval) {
    for (double nbar : {0.0, 0.3, 0.6, 2.0, 100.0}) {
        for (int k = 0; k <= 100; ++k) {
            ChannelWeights w = thermal_weights(nbar, k / 100.0);
            ASSERT_GE(w.q1, 0.0);
            ASSERT_LE(w.q1, 1.0);
            ASSERT_GE(w.q2, 0.0);
            ASSERT_LE(w.q2, 1.0);
            ASSERT_GE(w.q1, w.q2);
        }
    }
}

TEST(evolve_single_qubit, identity_at_t0) {
    std::mt19937_64 rng(21);
    Mat2 rho = gqd::testing::random_qubit_state(rng);
    EXPECT_LT(max_abs_diff(evolve_single_qubit(rho, ChannelWeights{1.0, 1.0, 0.0}), rho), 1e-15);
}

TEST(evolve_single_qubit, zero_temperature_decays_to_zero_level) {
    // RK4 of the master equation to gamma t = 30 is the oracle.
    LindbladGenerator gen{0.0, 1.0};
    Mat2 integrated = integrate_single(ket_one(), gen, 30.0, 1e-3);
    EXPECT_LT(max_abs_diff(integrated, ket_zero()), 1e-10);
    Mat2 closed = evolve_single_qubit(ket_one(), thermal_weights(0.0, std::exp(-15.0)));
    EXPECT_LT(max_abs_diff(closed, ket_zero()), 1e-12);
    EXPECT_LT(max_abs_diff(closed, integrated), 1e-10);
}

TEST(evolve_single_qubit, long_time_limit_is_generator_fixed_point) {
    std::mt19937_64 rng(22);
    LindbladGenerator gen{0.6, 1.0};
    for (int trial = 0; trial < 20; ++trial) {
        Mat2 out = evolve_single_qubit(gqd::testing::random_qubit_state(rng), thermal_weights(0.6, 0.0));
        EXPECT_LT(lindblad_rhs(out, gen).cwiseAbs().maxCoeff(), 1e-15);
        EXPECT_NEAR(out(0, 0).real(), 0.6 / 2.2, 1e-15);
        EXPECT_NEAR(out(1, 1).real(), 1.6 / 2.2, 1e-15);
        EXPECT_NEAR(out(1, 1).real(), 0.7273, 1e-4);
        EXPECT_EQ(std::abs(out(0, 1)), 0.0);
    }
}

TEST(evolve_single_qubit, matches_integrated_master_equation) {
    std::mt19937_64 rng(23);
    for (double nbar : {0.0, 0.6, 3.0}) {
        LindbladGenerator gen{nbar, 1.0};
        Mat2 rho0 = gqd::testing::random_qubit_state(rng);
        for (double t : {0.1, 0.7, 1.5}) {
            double p = std::exp(-(2 * nbar + 1) * t / 2);
            Mat2 closed = evolve_single_qubit(rho0, thermal_weights(nbar, p));
            Mat2 integrated = integrate_single(rho0, gen, t, 1e-4);
            EXPECT_LT(max_abs_diff(closed, integrated), 1e-10) << "nbar=" << nbar << " t=" << t;
        }
    }
}

TEST(evolve_single_qubit, rejects_invalid_state) {
    Mat2 bad = Mat2::Identity();
    EXPECT_EQ(code_of([&] { evolve_single_qubit(bad, ChannelWeights{}); }), ErrorCode::InvalidState);
}

TEST(lindblad_rhs, examples) {
    for (double nbar : {0.0, 0.6, 4.0}) {
        LindbladGenerator gen{nbar, 1.3};
        EXPECT_LT(lindblad_rhs(thermal_qubit_state(nbar), gen).cwiseAbs().maxCoeff(), 1e-15);
    }
    LindbladGenerator decay_only{0.0, 0.7};
    Mat2 d = lindblad_rhs(ket_one(), decay_only);
    EXPECT_NEAR(d(0, 0).real(), -0.7, 1e-15);
    EXPECT_NEAR(d(1, 1).real(), 0.7, 1e-15);
}

TEST(lindblad_rhs, traceless_and_hermitian) {
    std::mt19937_64 rng(24);
    ReservoirConfig config{0.6, 1.0, 0.5, Topology::TwoSided};
    for (int trial = 0; trial < 200; ++trial) {
        Mat2 h2 = gqd::testing::random_hermitian<2>(rng);
        Mat2 d2 = lindblad_rhs(h2, LindbladGenerator{0.6, 1.0});
        ASSERT_LT(std::abs(d2.trace()), 1e-12);
        ASSERT_LT(hermiticity_defect(d2), 1e-12);
        Mat4 h4 = gqd::testing::random_hermitian<4>(rng);
        Mat4 d4 = lindblad_rhs(h4, config);
        ASSERT_LT(std::abs(d4.trace()), 1e-12);
        ASSERT_LT(hermiticity_defect(d4), 1e-12);
    }
}

TEST(evolve_pair, identity_at_t0_and_x_structure) {
    std::mt19937_64 rng(25);
    ReservoirConfig config{0.6, 1.0, 1.0, Topology::TwoSided};
    DensityMatrix4 rho = gqd::testing::random_density_matrix(rng);
    EXPECT_LT(max_abs_diff(evolve_pair(rho, config, 0.0).matrix(), rho.matrix()), 1e-15);
    for (Topology topo : {Topology::TwoSided, Topology::OneSidedA, Topology::OneSidedB}) {
        ReservoirConfig c{0.6, 1.0, 1.0, topo};
        for (double a2 : {0.3, 0.5, 0.7}) {
            for (double t : {0.0, 0.2, 1.0, 5.0}) {
                DensityMatrix4 e = evolve_pair(psi_alpha_state(a2), c, t);
                EXPECT_EQ(std::abs(e(1, 2)), 0.0);
            }
        }
    }
}

TEST(evolve_pair, matches_master_equation_on_psi) {
    ReservoirConfig config{0.6, 1.0, 1.0, Topology::TwoSided};
    DensityMatrix4 rho0 = psi_alpha_state(0.5);
    Mat4 closed = evolve_pair(rho0, config, 0.5).matrix();
    Mat4 integrated = integrate_master_equation(rho0, config, 0.5, 1e-4).matrix();
    EXPECT_LT(max_abs_diff(closed, integrated), 1e-8);
}

TEST(evolve_pair, matches_master_equation_on_acceptance_grid) {
    const Topology topologies[] = {Topology::TwoSided, Topology::OneSidedA, Topology::OneSidedB};
    for (Topology topo : topologies) {
        for (double nbar : {0.0, 0.6}) {
            ReservoirConfig config{nbar, 1.0, 1.0, topo};
            for (double a2 : {0.3, 0.5, 0.7}) {
                DensityMatrix4 rho0 = psi_alpha_state(a2);
                DensityMatrix4 integrated = rho0;
                double t = 0.0;
                for (double next : {0.25, 0.75, 1.5}) {
                    integrated = integrate_master_equation(integrated, config, next - t, 1e-4);
                    t = next;
                    Mat4 closed = evolve_pair(rho0, config, t).matrix();
                    EXPECT_LT(max_abs_diff(closed, integrated.matrix()), 1e-8)
                        << "alpha^2=" << a2 << " nbar=" << nbar << " t=" << t;
                }
            }
        }
    }
}

TEST(evolve_pair, errors) {
    ReservoirConfig config{0.6, 1.0, 1.0, Topology::TwoSided};
    EXPECT_EQ(code_of([&] { evolve_pair(bell_state(), config, -0.5); }), ErrorCode::NegativeTime);
    ReservoirConfig bad{-0.1, 1.0, 1.0, Topology::TwoSided};
    EXPECT_EQ(code_of([&] { evolve_pair(bell_state(), bad, 0.5); }), ErrorCode::ValidationError);
    ReservoirConfig bad_rate{0.1, 0.0, 1.0, Topology::TwoSided};
    EXPECT_EQ(code_of([&] { evolve_pair(bell_state(), bad_rate, 0.5); }), ErrorCode::ValidationError);
}

TEST(evolve_pair, trace_hermiticity_positivity_on_random_states) {
    std::mt19937_64 rng(26);
    std::uniform_real_distribution<double> log_t(std::log(1e-3), std::log(10.0));
    std::uniform_real_distribution<double> nbar_dist(0.0, 2.0);
    const Topology topologies[] = {Topology::TwoSided, Topology::OneSidedA, Topology::OneSidedB};
    for (int trial = 0; trial < 1000; ++trial) {
        ReservoirConfig config{nbar_dist(rng), 1.0, 0.5 + nbar_dist(rng), topologies[trial % 3]};
        DensityMatrix4 rho0 = gqd::testing::random_density_matrix_of_rank(rng, 1 + trial % 4);
        double t = std::exp(log_t(rng));
        Mat4 e = evolve_pair(rho0, config, t).matrix();
        ASSERT_NEAR(e.trace().real(), 1.0, 1e-12);
        ASSERT_LT(hermiticity_defect(e), 1e-15);
        ASSERT_GE(hermitian_eig(e).values[3], -1e-10);
    }
}

TEST(evolve_pair, semigroup) {
    std::mt19937_64 rng(27);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        ReservoirConfig config{u(rng), 1.0, 0.3 + u(rng), trial % 2 ? Topology::TwoSided : Topology::OneSidedB};
        DensityMatrix4 rho0 = gqd::testing::random_density_matrix(rng);
        double t1 = u(rng);
        double t2 = u(rng);
        Mat4 stepwise = evolve_pair(evolve_pair(rho0, config, t1), config, t2).matrix();
        Mat4 direct = evolve_pair(rho0, config, t1 + t2).matrix();
        ASSERT_LT(max_abs_diff(stepwise, direct), 1e-10);
    }
}

TEST(evolve_pair, zero_temperature_reduction) {
    std::mt19937_64 rng(28);
    ReservoirConfig config{0.0, 1.0, 0.6, Topology::TwoSided};
    DensityMatrix4 rho0 = gqd::testing::random_density_matrix(rng);
    double t = 0.8;
    double pa = decay_factor(config, Qubit::A, t);
    double pb = decay_factor(config, Qubit::B, t);
    ChannelWeights wa = channel_weights(config, Qubit::A, t);
    EXPECT_EQ(wa.q2, 0.0);
    EXPECT_NEAR(wa.q1, pa * pa, 1e-15);
    Mat4 e = evolve_pair(rho0, config, t).matrix();
    // Only the |11> population can feed |11> when nothing is excited.
    EXPECT_NEAR(e(0, 0).real(), pa * pa * pb * pb * rho0(0, 0).real(), 1e-15);
    EXPECT_LT(std::abs(e(0, 1) - pa * pa * pb * rho0(0, 1)), 1e-15);
}

TEST(evolve_pair, long_time_state_is_thermal_product) {
    std::mt19937_64 rng(29);
    DensityMatrix4 rho0 = gqd::testing::random_density_matrix(rng);
    ReservoirConfig two{0.6, 1.0, 1.0, Topology::TwoSided};
    Mat4 expected = kron(thermal_qubit_state(0.6), thermal_qubit_state(0.6));
    EXPECT_LT(max_abs_diff(evolve_pair(rho0, two, 40.0).matrix(), expected), 1e-9);
}

TEST(evolve_pair, high_temperature_proxy_approaches_thermal_product) {
    // At finite nbar the fixed point is tau (x) tau with tau = diag(nbar, nbar + 1)/(2 nbar + 1),
    // a trace distance of delta + delta^2 from I/4 with delta = 1/(2(2 nbar + 1)).
    DensityMatrix4 rho0 = psi_alpha_state(0.5);
    for (double nbar : {100.0, 1000.0}) {
        ReservoirConfig config{nbar, 1.0, 1.0, Topology::TwoSided};
        double gamma0_t = 20.0;
        Mat4 late = evolve_pair(rho0, config, gamma0_t / nbar).matrix();
        Mat4 tau = kron(thermal_qubit_state(nbar), thermal_qubit_state(nbar));
        EXPECT_LT(max_abs_diff(late, tau), 1e-12);
        double distance = 0.5 * trace_norm(Mat4(late - Mat4::Identity() * 0.25));
        double delta = 0.5 / (2.0 * nbar + 1.0);
        EXPECT_NEAR(distance, delta + delta * delta, 1e-12);
    }
    ReservoirConfig hot{1000.0, 1.0, 1.0, Topology::TwoSided};
    double d = 0.5 * trace_norm(Mat4(evolve_pair(rho0, hot, 0.01).matrix() - Mat4::Identity() * 0.25));
    EXPECT_LT(d, 1e-3);
}

TEST(integrate_master_equation, examples) {
    ReservoirConfig config{0.6, 1.0, 1.0, Topology::TwoSided};
    DensityMatrix4 rho0 = psi_alpha_state(0.3);
    EXPECT_LT(max_abs_diff(integrate_master_equation(rho0, config, 0.0, 1e-4).matrix(), rho0.matrix()), 1e-15);
    Mat4 integrated = integrate_master_equation(rho0, config, 1.0, 1e-4).matrix();
    EXPECT_LT(max_abs_diff(integrated, evolve_pair(rho0, config, 1.0).matrix()), 1e-8);
}

TEST(integrate_master_equation, one_sided_leaves_b_untouched) {
    std::mt19937_64 rng(30);
    ReservoirConfig config{0.6, 1.0, 1.0, Topology::OneSidedA};
    DensityMatrix4 rho0 = gqd::testing::random_density_matrix(rng);
    Mat2 b0 = reduced_state_b(rho0.matrix());
    DensityMatrix4 rho = rho0;
    for (int k = 0; k < 5; ++k) {
        rho = integrate_master_equation(rho, config, 0.2, 1e-4);
        EXPECT_LT(max_abs_diff(reduced_state_b(rho.matrix()), b0), 1e-8);
    }
}

TEST(integrate_master_equation, rejects_large_steps) {
    ReservoirConfig config{0.6, 1.0, 4.0, Topology::TwoSided};
    EXPECT_EQ(code_of([&] { integrate_master_equation(bell_state(), config, 1.0, 1e-3); }),
              ErrorCode::StepTooLarge);
    EXPECT_NO_THROW(integrate_master_equation(bell_state(), config, 0.01, 2.5e-4));
    EXPECT_EQ(code_of([&] { integrate_master_equation(bell_state(), config, -1.0, 1e-4); }),
              ErrorCode::NegativeTime);
}
