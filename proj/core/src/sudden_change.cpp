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

#include "gqd/sudden_change.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "gqd/error.hpp"
#include "gqd/states.hpp"

namespace gqd {
namespace {

constexpr int kMaxBisections = 200;
constexpr double kWindowResolution = 1e-3;
constexpr double kInvGolden = 0.6180339887498949;

// Golden-section search for the extremum of the value in [lo, hi].
double polish_extremum(const PointEvaluator &refiner, Measure measure, double lo, double hi, bool maximum) {
    auto f = [&](double t) {
        double v = value_of(refiner(t), measure);
        return maximum ? v : -v;
    };
    double x1 = hi - kInvGolden * (hi - lo);
    double x2 = lo + kInvGolden * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > kWindowResolution) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvGolden * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvGolden * (hi - lo);
            f1 = f(x1);
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

void ScanConfig::validate() const {
    if (!(t_max > 0.0) || !std::isfinite(t_max)) {
        throw Error(ErrorCode::ValidationError, "t_max must be positive");
    }
    if (n_points < 2) {
        throw Error(ErrorCode::ValidationError, "n_points must be at least 2");
    }
    if (!(refine_tol > 0.0)) {
        throw Error(ErrorCode::ValidationError, "refine_tol must be positive");
    }
    if (!(theta_jump_threshold > 0.0)) {
        throw Error(ErrorCode::ValidationError, "theta_jump_threshold must be positive");
    }
    if (!(time_scale > 0.0) || !std::isfinite(time_scale)) {
        throw Error(ErrorCode::ValidationError, "time_scale must be positive");
    }
}

double ScanConfig::time_at(int index) const { return t_max * index / (n_points - 1); }

double value_of(const TrajectoryPoint &point, Measure measure) {
    switch (measure) {
        case Measure::TDD:
            return point.d_t;
        case Measure::HDD:
            return point.d_h;
        case Measure::BDD:
            return point.d_b;
    }
    return 0.0;
}

double angle_of(const TrajectoryPoint &point, Measure measure) {
    switch (measure) {
        case Measure::HDD:
            return point.theta_h;
        case Measure::BDD:
            return point.theta_b;
        case Measure::TDD:
            break;
    }
    throw Error(ErrorCode::ValidationError, "TDD trajectories carry no tracked measurement angle");
}

bool tie_of(const TrajectoryPoint &point, Measure measure) {
    switch (measure) {
        case Measure::HDD:
            return point.tie_flag_h;
        case Measure::BDD:
            return point.tie_flag_b;
        case Measure::TDD:
            return false;
    }
    return false;
}

TrajectoryPoint evaluate_point(double alpha_sq, const ReservoirConfig &config, const ScanConfig &scan,
                               double gamma_t) {
    DensityMatrix4 rho = evolve_pair(psi_alpha_state(alpha_sq), config, gamma_t / scan.time_scale);
    DiscordResult tdd = tdd_x_state(rho);
    DiscordResult hdd = hdd_closed_form(rho);
    DiscordResult bdd = bdd_via_fidelity(rho);
    TrajectoryPoint p;
    p.gamma_t = gamma_t;
    p.d_t = tdd.value;
    p.d_h = hdd.value;
    p.d_b = bdd.value;
    p.theta_h = measurement_angle(hdd.optimal_direction);
    p.theta_b = measurement_angle(bdd.optimal_direction);
    p.tie_flag_h = hdd.tie;
    p.tie_flag_b = bdd.tie;
    return p;
}

PointEvaluator make_point_evaluator(double alpha_sq, const ReservoirConfig &config, const ScanConfig &scan) {
    return [alpha_sq, config, scan](double gamma_t) { return evaluate_point(alpha_sq, config, scan, gamma_t); };
}

std::vector<TrajectoryPoint> compute_trajectory(double alpha_sq, const ReservoirConfig &config,
                                                const ScanConfig &scan) {
    scan.validate();
    config.validate();
    if (!(alpha_sq >= 0.0 && alpha_sq <= 1.0)) {
        throw Error(ErrorCode::ValidationError, "alpha^2 must lie in [0, 1]");
    }
    const int n = scan.n_points;
    std::vector<TrajectoryPoint> out(static_cast<std::size_t>(n));
    const int workers = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, n);

    auto work = [&](int begin, int end) {
        for (int k = begin; k < end; ++k) {
            out[static_cast<std::size_t>(k)] = evaluate_point(alpha_sq, config, scan, scan.time_at(k));
        }
    };
    if (workers == 1) {
        work(0, n);
        return out;
    }
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    {
        std::vector<std::jthread> threads;
        for (int w = 0; w < workers; ++w) {
            int begin = n * w / workers;
            int end = n * (w + 1) / workers;
            threads.emplace_back([&, w, begin, end] {
                try {
                    work(begin, end);
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

std::vector<SuddenChangeEvent> detect_sudden_changes(const std::vector<TrajectoryPoint> &trajectory,
                                                     const ScanConfig &scan, const PointEvaluator &refiner,
                                                     Measure measure) {
    if (measure == Measure::TDD) {
        return {};
    }
    std::vector<const TrajectoryPoint *> anchors;
    for (const TrajectoryPoint &p : trajectory) {
        if (!tie_of(p, measure)) {
            anchors.push_back(&p);
        }
    }
    std::vector<SuddenChangeEvent> events;
    for (std::size_t k = 0; k + 1 < anchors.size(); ++k) {
        double lo = anchors[k]->gamma_t;
        double hi = anchors[k + 1]->gamma_t;
        double a_lo = angle_of(*anchors[k], measure);
        double a_hi = angle_of(*anchors[k + 1], measure);
        if (std::abs(a_hi - a_lo) <= scan.theta_jump_threshold) {
            continue;
        }
        int steps = 0;
        while (hi - lo > scan.refine_tol) {
            if (++steps > kMaxBisections) {
                throw Error(ErrorCode::NoConvergence, "sudden-change bracket failed to shrink");
            }
            double mid = 0.5 * (lo + hi);
            double a_mid = angle_of(refiner(mid), measure);
            if (std::abs(a_mid - a_lo) <= std::abs(a_mid - a_hi)) {
                lo = mid;
                a_lo = a_mid;
            } else {
                hi = mid;
                a_hi = a_mid;
            }
        }
        if (std::abs(a_hi - a_lo) <= scan.theta_jump_threshold) {
            std::ostringstream os;
            os << measure_name(measure) << " angle drifts continuously near gamma t = " << 0.5 * (lo + hi)
               << " (residual jump " << std::abs(a_hi - a_lo) << " rad)";
            throw Error(ErrorCode::NoConvergence, os.str());
        }
        events.push_back(SuddenChangeEvent{measure, 0.5 * (lo + hi), a_lo, a_hi, hi - lo});
    }
    return events;
}

std::vector<SuddenChangeEvent> detect_sudden_changes(const std::vector<TrajectoryPoint> &trajectory,
                                                     const ScanConfig &scan, const PointEvaluator &refiner) {
    scan.validate();
    std::vector<SuddenChangeEvent> events = detect_sudden_changes(trajectory, scan, refiner, Measure::BDD);
    std::vector<SuddenChangeEvent> hdd = detect_sudden_changes(trajectory, scan, refiner, Measure::HDD);
    events.insert(events.end(), hdd.begin(), hdd.end());
    std::stable_sort(events.begin(), events.end(), [](const SuddenChangeEvent &a, const SuddenChangeEvent &b) {
        return a.gamma_t_c < b.gamma_t_c;
    });
    return events;
}

std::vector<MonotonicWindow> monotonicity_windows(const std::vector<TrajectoryPoint> &trajectory,
                                                  Measure measure, const PointEvaluator *refiner) {
    std::vector<MonotonicWindow> windows;
    if (trajectory.size() < 2) {
        if (!trajectory.empty()) {
            double t = trajectory.front().gamma_t;
            windows.push_back({t, t, Trend::Decreasing, true});
        }
        return windows;
    }
    for (std::size_t k = 0; k + 1 < trajectory.size(); ++k) {
        double step = value_of(trajectory[k + 1], measure) - value_of(trajectory[k], measure);
        Trend trend = step > kMonotonicDeadband ? Trend::Increasing : Trend::Decreasing;
        bool flat = std::abs(step) <= kMonotonicDeadband;
        if (windows.empty() || windows.back().direction != trend) {
            windows.push_back({trajectory[k].gamma_t, trajectory[k + 1].gamma_t, trend, flat});
        } else {
            windows.back().end = trajectory[k + 1].gamma_t;
            windows.back().zero_variation = windows.back().zero_variation && flat;
        }
    }
    double spacing = trajectory[1].gamma_t - trajectory[0].gamma_t;
    if (refiner != nullptr && spacing > kWindowResolution) {
        for (std::size_t w = 0; w + 1 < windows.size(); ++w) {
            double t = windows[w].end;
            double lo = std::max(trajectory.front().gamma_t, t - spacing);
            double hi = std::min(trajectory.back().gamma_t, t + spacing);
            bool maximum = windows[w].direction == Trend::Increasing;
            double polished = polish_extremum(*refiner, measure, lo, hi, maximum);
            windows[w].end = polished;
            windows[w + 1].start = polished;
        }
    }
    return windows;
}

std::vector<double> second_difference_spikes(const std::vector<TrajectoryPoint> &trajectory, Measure measure,
                                             double threshold) {
    std::vector<double> times;
    for (std::size_t k = 1; k + 1 < trajectory.size(); ++k) {
        double d2 = value_of(trajectory[k + 1], measure) - 2.0 * value_of(trajectory[k], measure) +
                    value_of(trajectory[k - 1], measure);
        if (std::abs(d2) > threshold) {
            times.push_back(trajectory[k].gamma_t);
        }
    }
    return times;
}

}  // namespace gqd
