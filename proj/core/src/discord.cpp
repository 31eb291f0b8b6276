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

#include "gqd/discord.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gqd/error.hpp"

namespace gqd {
namespace {

constexpr double kPi = std::numbers::pi;
const double kBuresScale = 2.0 + std::numbers::sqrt2;

// Positions that must vanish in an X state.
constexpr int kOffX[8][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 3}, {2, 0}, {2, 3}, {3, 1}, {3, 2}};

double bures_from_root_fidelity(double root_fidelity) {
    return std::sqrt(kBuresScale * std::max(0.0, 1.0 - root_fidelity));
}

double clamp_small_negative(double v) { return (v < 0.0 && v > -1e-9) ? 0.0 : v; }

// Lambda(u) = sum_i u_i sqrt(rho) (sigma_i (x) I) sqrt(rho), prebuilt per state.
class FidelityLandscape {
  public:
    explicit FidelityLandscape(const DensityMatrix4 &rho) {
        Mat4 s = sqrt_psd(rho.matrix());
        for (int i = 0; i < 3; ++i) {
            Mat4 m = s * kron(pauli(i + 1), Mat2::Identity()) * s;
            parts_[i] = (m + m.adjoint()) * 0.5;
        }
    }

    double operator()(const MeasurementDirection &dir) const {
        auto u = dir.axis();
        Mat4 lambda = u[0] * parts_[0] + u[1] * parts_[1] + u[2] * parts_[2];
        RealVector<4> ev = hermitian_eigenvalues_unchecked(lambda);
        return 0.5 * (1.0 - ev.sum() + 2.0 * (ev[0] + ev[1]));
    }

  private:
    Mat4 parts_[3];
};

// Inner problem of the Bures oracle for a fixed measurement basis.
class ClassicalFidelityAscent {
  public:
    explicit ClassicalFidelityAscent(const DensityMatrix4 &rho, int max_iterations = kMaxIterations)
        : root_(sqrt_psd(rho.matrix())), max_iterations_(max_iterations) {}

    double operator()(const MeasurementDirection &dir) const {
        EigenDecomposition<2> basis = hermitian_eig(dir.u_dot_sigma());
        // A_k = (<e_k| (x) I) sqrt(rho), a 2x4 block.
        Eigen::Matrix<Complex, 2, 4> a[2];
        for (int k = 0; k < 2; ++k) {
            for (int b = 0; b < 2; ++b) {
                a[k].row(b) = std::conj(basis.vectors(0, k)) * root_.row(b) +
                              std::conj(basis.vectors(1, k)) * root_.row(2 + b);
            }
        }
        // Start from the dephased state: sigma_k = A_k A_k^dagger.
        Mat2 s[2];
        for (int k = 0; k < 2; ++k) {
            Mat2 block = a[k] * a[k].adjoint();
            s[k] = sqrt_psd(Mat2((block + block.adjoint()) * 0.5));
        }
        if (!normalize(s)) {
            return 0.0;
        }
        double best = 0.0;
        double previous = -1.0;
        for (int iter = 0; iter < max_iterations_; ++iter) {
            Mat4 m;
            m.topRows<2>() = s[0] * a[0];
            m.bottomRows<2>() = s[1] * a[1];
            Eigen::JacobiSVD<Mat4> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
            double f = svd.singularValues().sum();
            best = std::max(best, f);
            if (std::abs(f - previous) < kTolerance) {
                break;
            }
            previous = f;
            Mat4 polar = svd.matrixV() * svd.matrixU().adjoint();
            for (int k = 0; k < 2; ++k) {
                Mat2 c = a[k] * polar.middleCols<2>(2 * k);
                s[k] = positive_part((c + c.adjoint()) * 0.5);
            }
            if (!normalize(s)) {
                break;
            }
        }
        return best;
    }

  private:
    static constexpr int kMaxIterations = 500;
    static constexpr double kTolerance = 1e-14;

    static Mat2 positive_part(const Mat2 &h) {
        Eigen::SelfAdjointEigenSolver<Mat2> solver(h);
        RealVector<2> w = solver.eigenvalues().cwiseMax(0.0);
        return solver.eigenvectors() * w.asDiagonal() * solver.eigenvectors().adjoint();
    }

    // Enforces sum_k tr(S_k^2) = 1; false if both blocks vanished.
    static bool normalize(Mat2 (&s)[2]) {
        double norm = std::sqrt(s[0].squaredNorm() + s[1].squaredNorm());
        if (norm < 1e-300) {
            return false;
        }
        s[0] /= norm;
        s[1] /= norm;
        return true;
    }

    Mat4 root_;
    int max_iterations_;
};

// The first ascent step alone ranks grid directions well enough to seed
// refinement; it equals the full value on states classical in that basis.
constexpr int kScreenIterations = 1;

DiscordResult from_search(const SphereSearchResult &r, double value, Measure measure) {
    return DiscordResult{clamp_small_negative(value), r.direction, measure, r.tie};
}

}  // namespace

std::string_view measure_name(Measure measure) {
    switch (measure) {
        case Measure::TDD:
            return "tdd";
        case Measure::HDD:
            return "hdd";
        case Measure::BDD:
            return "bdd";
    }
    return "unknown";
}

Measure parse_measure(std::string_view name) {
    if (name == "tdd") return Measure::TDD;
    if (name == "hdd") return Measure::HDD;
    if (name == "bdd") return Measure::BDD;
    throw Error(ErrorCode::ValidationError, "unknown measure '" + std::string(name) + "'");
}

DensityMatrix4 measured_state(const DensityMatrix4 &rho, const MeasurementDirection &dir) {
    return DensityMatrix4::from_matrix(dephase_on_a(rho.matrix(), dir));
}

bool is_x_state(const DensityMatrix4 &rho, double tolerance) {
    for (const auto &ij : kOffX) {
        if (std::abs(rho(ij[0], ij[1])) > tolerance) {
            return false;
        }
    }
    return true;
}

XStateParams x_state_params(const DensityMatrix4 &rho) {
    if (!is_x_state(rho)) {
        throw Error(ErrorCode::NotXState, "state has coherences outside the X pattern");
    }
    double r14 = std::abs(rho(0, 3));
    double r23 = std::abs(rho(1, 2));
    XStateParams x;
    x.xi1 = 2.0 * (r23 + r14);
    x.xi2 = 2.0 * (r23 - r14);
    x.xi3 = 1.0 - 2.0 * (rho(1, 1).real() + rho(2, 2).real());
    x.x_a3 = 2.0 * (rho(0, 0).real() + rho(1, 1).real()) - 1.0;
    return x;
}

DiscordResult tdd_x_state(const DensityMatrix4 &rho) {
    XStateParams x = x_state_params(rho);
    double xi1_sq = x.xi1 * x.xi1;
    double xi2_sq = x.xi2 * x.xi2;
    double xi3_sq = x.xi3 * x.xi3;
    double xi_max = std::max(xi3_sq, xi2_sq + x.x_a3 * x.x_a3);
    double xi_min = std::min(xi1_sq, xi3_sq);
    double denominator = xi_max - xi_min + xi1_sq - xi2_sq;
    double value;
    if (denominator < 1e-14) {
        value = std::abs(x.xi1);
    } else {
        value = std::sqrt(std::max(0.0, (xi1_sq * xi_max - xi2_sq * xi_min) / denominator));
    }

    MeasurementDirection best{0.0, 0.0};
    double best_objective = tdd_objective(rho, best);
    for (int j = 0; j < 16; ++j) {
        MeasurementDirection d{kPi / 2.0, 2.0 * kPi * j / 16.0};
        double v = tdd_objective(rho, d);
        if (v < best_objective - 1e-12) {
            best = d;
            best_objective = v;
        }
    }
    return DiscordResult{value, canonicalize(best), Measure::TDD, false};
}

double tdd_analytic(double alpha_sq, double p_a, double p_b) {
    if (!(alpha_sq >= 0.0 && alpha_sq <= 1.0)) {
        throw Error(ErrorCode::DomainError, "alpha^2 must lie in [0, 1]");
    }
    if (!(p_a >= 0.0 && p_a <= 1.0 && p_b >= 0.0 && p_b <= 1.0)) {
        throw Error(ErrorCode::DomainError, "decay factors must lie in [0, 1]");
    }
    // Taking the larger weight makes alpha^2 <-> 1 - alpha^2 bit-exact.
    double major = std::max(alpha_sq, 1.0 - alpha_sq);
    return 2.0 * p_a * p_b * std::sqrt(major * (1.0 - major));
}

DiscordResult hdd_closed_form(const DensityMatrix4 &rho) {
    PauliCoefficients pc = pauli_decompose(sqrt_psd(rho.matrix()));
    double r_sq = pc.c.row(0).squaredNorm();
    Eigen::Matrix<double, 3, 4> z = pc.c.bottomRows<3>();
    Eigen::Matrix3d zzt = z * z.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(zzt);
    const auto &w = solver.eigenvalues();  // ascending
    const auto &v = solver.eigenvectors();
    double z_max = w[2];

    // Degenerate top eigenspace: choose the axis in it closest to z.
    constexpr double kGapTolerance = 1e-12;
    Eigen::Vector3d axis = v.col(2);
    bool tie = false;
    int degenerate = 1;
    while (degenerate < 3 && z_max - w[2 - degenerate] < kGapTolerance) {
        ++degenerate;
    }
    if (degenerate > 1) {
        Eigen::Vector3d toward_z = Eigen::Vector3d::Zero();
        for (int k = 3 - degenerate; k < 3; ++k) {
            toward_z += v(2, k) * v.col(k);
        }
        if (toward_z.norm() > 1e-6) {
            axis = toward_z.normalized();
            tie = true;  // the eigenspace mixes polar and equatorial axes
        }
    }
    MeasurementDirection dir{std::acos(std::clamp(axis[2], -1.0, 1.0)), std::atan2(axis[1], axis[0])};
    double value = 2.0 * (1.0 - r_sq - z_max);
    return DiscordResult{clamp_small_negative(value), canonicalize(dir), Measure::HDD, tie};
}

double bdd_objective(const DensityMatrix4 &rho, const MeasurementDirection &dir) {
    return FidelityLandscape(rho)(dir);
}

DiscordResult bdd_via_fidelity(const DensityMatrix4 &rho, const SphereSearchOptions &search) {
    FidelityLandscape landscape(rho);
    SphereSearchResult r = maximize_on_sphere(std::cref(landscape), search);
    double f_max = std::clamp(r.value, 0.0, 1.0);
    return from_search(r, bures_from_root_fidelity(std::sqrt(f_max)), Measure::BDD);
}

double tdd_objective(const DensityMatrix4 &rho, const MeasurementDirection &dir) {
    return trace_norm(Mat4(rho.matrix() - dephase_on_a(rho.matrix(), dir)));
}

double hdd_objective(const DensityMatrix4 &rho, const MeasurementDirection &dir) {
    Mat4 s = sqrt_psd(rho.matrix());
    Mat4 diff = s - dephase_on_a(s, dir);
    return 2.0 * diff.squaredNorm();
}

double bdd_fixed_direction_root_fidelity(const DensityMatrix4 &rho, const MeasurementDirection &dir) {
    return ClassicalFidelityAscent(rho)(dir);
}

DiscordResult tdd_oracle(const DensityMatrix4 &rho, const SphereSearchOptions &search) {
    const Mat4 &m = rho.matrix();
    SphereSearchResult r = minimize_on_sphere(
        [&](const MeasurementDirection &d) {
            Mat4 diff = m - dephase_on_a(m, d);
            return hermitian_eigenvalues_unchecked((diff + diff.adjoint()) * 0.5).cwiseAbs().sum();
        },
        search);
    return from_search(r, r.value, Measure::TDD);
}

DiscordResult hdd_oracle(const DensityMatrix4 &rho, const SphereSearchOptions &search) {
    Mat4 s = sqrt_psd(rho.matrix());
    SphereSearchResult r = minimize_on_sphere(
        [&](const MeasurementDirection &d) { return 2.0 * (s - dephase_on_a(s, d)).squaredNorm(); }, search);
    return from_search(r, r.value, Measure::HDD);
}

DiscordResult bdd_oracle(const DensityMatrix4 &rho, const SphereSearchOptions &search) {
    ClassicalFidelityAscent ascent(rho);
    ClassicalFidelityAscent screen(rho, kScreenIterations);
    SphereSearchResult r = maximize_on_sphere(std::cref(ascent), std::cref(screen), search);
    return from_search(r, bures_from_root_fidelity(std::min(r.value, 1.0)), Measure::BDD);
}

DiscordResult bdd_measured_state_bound(const DensityMatrix4 &rho, const SphereSearchOptions &search) {
    SphereSearchResult r = maximize_on_sphere(
        [&](const MeasurementDirection &d) {
            return std::sqrt(std::max(0.0, uhlmann_fidelity(rho, measured_state(rho, d))));
        },
        search);
    return from_search(r, bures_from_root_fidelity(std::min(r.value, 1.0)), Measure::BDD);
}

DiscordResult compute_discord(const DensityMatrix4 &rho, Measure measure) {
    switch (measure) {
        case Measure::TDD:
            return is_x_state(rho) ? tdd_x_state(rho) : tdd_oracle(rho);
        case Measure::HDD:
            return hdd_closed_form(rho);
        case Measure::BDD:
            return bdd_via_fidelity(rho);
    }
    throw Error(ErrorCode::ValidationError, "unknown measure");
}

DiscordResult compute_discord_oracle(const DensityMatrix4 &rho, Measure measure) {
    switch (measure) {
        case Measure::TDD:
            return tdd_oracle(rho);
        case Measure::HDD:
            return hdd_oracle(rho);
        case Measure::BDD:
            return bdd_oracle(rho);
    }
    throw Error(ErrorCode::ValidationError, "unknown measure");
}

}  // namespace gqd
