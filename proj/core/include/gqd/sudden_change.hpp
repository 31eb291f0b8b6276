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

#ifndef GQD_SUDDEN_CHANGE_HPP
#define GQD_SUDDEN_CHANGE_HPP

// Discord trajectories of the evolved alpha|11> + beta|00> family and
// detection of sudden changes. A sudden change is a discontinuity of the
// optimal measurement angle; it is localized by bisection on which side of
// the jump the angle falls, so the result does not depend on how sharp the
// kink in the discord value looks.

#include <functional>
#include <vector>

#include "gqd/discord.hpp"
#include "gqd/thermal_channel.hpp"

namespace gqd {

struct ScanConfig {
    double t_max = 1.5;
    int n_points = 1501;
    double refine_tol = 1e-4;
    double theta_jump_threshold = 0.3;
    /// Scan time tau relates to physical time by tau = time_scale * t. With
    /// gamma = 1 the default makes tau = gamma t; time_scale = nbar gives the
    /// gamma_0 t axis used at high temperature.
    double time_scale = 1.0;

    /// Throws Error(ValidationError).
    void validate() const;
    double time_at(int index) const;
};

struct TrajectoryPoint {
    double gamma_t = 0.0;
    double d_t = 0.0;
    double d_b = 0.0;
    double d_h = 0.0;
    double theta_b = 0.0;  // measurement_angle of the BDD optimum
    double theta_h = 0.0;  // measurement_angle of the HDD optimum
    bool tie_flag_h = false;
    bool tie_flag_b = false;
};

struct SuddenChangeEvent {
    Measure measure = Measure::HDD;
    double gamma_t_c = 0.0;
    double theta_before = 0.0;
    double theta_after = 0.0;
    double bracket_width = 0.0;
};

using PointEvaluator = std::function<TrajectoryPoint(double gamma_t)>;

double value_of(const TrajectoryPoint &point, Measure measure);
/// Throws Error(ValidationError) for TDD, which carries no tracked angle.
double angle_of(const TrajectoryPoint &point, Measure measure);
bool tie_of(const TrajectoryPoint &point, Measure measure);

/// Evaluates all three discords of the evolved state at scan time gamma_t.
TrajectoryPoint evaluate_point(double alpha_sq, const ReservoirConfig &config, const ScanConfig &scan,
                               double gamma_t);

/// Thread-safe evaluator bound to one parameter set; used as the refiner.
PointEvaluator make_point_evaluator(double alpha_sq, const ReservoirConfig &config, const ScanConfig &scan);

/// One independently evaluated point per grid time; spread over the available
/// hardware threads, results identical to a serial evaluation.
std::vector<TrajectoryPoint> compute_trajectory(double alpha_sq, const ReservoirConfig &config,
                                                const ScanConfig &scan);

/// Events for HDD and BDD, sorted by time. Tie-flagged points carry no
/// well-defined angle and are never used as bracket endpoints. Throws
/// Error(NoConvergence) when a bracket shrinks onto a continuous drift rather
/// than a jump.
std::vector<SuddenChangeEvent> detect_sudden_changes(const std::vector<TrajectoryPoint> &trajectory,
                                                     const ScanConfig &scan, const PointEvaluator &refiner);

std::vector<SuddenChangeEvent> detect_sudden_changes(const std::vector<TrajectoryPoint> &trajectory,
                                                     const ScanConfig &scan, const PointEvaluator &refiner,
                                                     Measure measure);

enum class Trend { Increasing, Decreasing };

struct MonotonicWindow {
    double start = 0.0;
    double end = 0.0;
    Trend direction = Trend::Decreasing;
    bool zero_variation = false;  // every step within the deadband
};

inline constexpr double kMonotonicDeadband = 1e-9;

/// Maximal runs of first differences with the same sign; a step counts as
/// increasing only when it exceeds the deadband. If a refiner is given and
/// the grid is coarser than 1e-3, interior boundaries are polished to 1e-3 by
/// golden-section search for the extremum.
std::vector<MonotonicWindow> monotonicity_windows(const std::vector<TrajectoryPoint> &trajectory,
                                                  Measure measure, const PointEvaluator *refiner = nullptr);

/// Diagnostic only: times where the second difference of the value exceeds
/// threshold. Never used as an event source.
std::vector<double> second_difference_spikes(const std::vector<TrajectoryPoint> &trajectory, Measure measure,
                                             double threshold);

}  // namespace gqd

#endif  // GQD_SUDDEN_CHANGE_HPP
