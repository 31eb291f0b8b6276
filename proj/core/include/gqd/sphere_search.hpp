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

#ifndef GQD_SPHERE_SEARCH_HPP
#define GQD_SPHERE_SEARCH_HPP

// Deterministic maximization of a function of a measurement direction: a
// uniform (theta, phi) grid, then restarted Nelder-Mead ascent from the best
// few well-separated grid peaks. No randomness, so
// repeated calls are bit-identical.

#include <functional>

#include "gqd/measurement.hpp"

namespace gqd {

struct SphereSearchOptions {
    int n_theta = 65;        // theta_i = pi i / (n_theta - 1), includes both poles and the equator
    int n_phi = 128;         // phi_j = 2 pi j / n_phi
    int n_seeds = 3;         // grid points refined
    double tolerance = 1e-10;  // stop when a full sweep improves by less than this
    int max_iterations = 10000;  // objective evaluations per refined seed
    double tie_tolerance = 1e-12;
    double tie_angle = 0.15;  // measurement_angle separation that makes two optima distinct
};

struct SphereSearchResult {
    MeasurementDirection direction;  // canonicalized
    double value = 0.0;
    /// Another grid point or refined seed whose measurement_angle differs by
    /// more than tie_angle reaches the optimum within tie_tolerance.
    bool tie = false;
    int iterations = 0;
};

using DirectionObjective = std::function<double(const MeasurementDirection &)>;

/// Throws Error(OptimizerStall) if refinement needs more than max_iterations.
SphereSearchResult maximize_on_sphere(const DirectionObjective &objective,
                                      const SphereSearchOptions &options = {});

/// Same search with the grid scored by screen, a cheaper stand-in for
/// objective whose local maxima sit in the same basins. Refinement and the
/// reported value use objective.
SphereSearchResult maximize_on_sphere(const DirectionObjective &objective, const DirectionObjective &screen,
                                      const SphereSearchOptions &options);

SphereSearchResult minimize_on_sphere(const DirectionObjective &objective,
                                      const SphereSearchOptions &options = {});

}  // namespace gqd

#endif  // GQD_SPHERE_SEARCH_HPP
