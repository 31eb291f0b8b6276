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

#include "gqd/sphere_search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "gqd/error.hpp"

namespace gqd {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSimplexTolerance = 1e-10;  // simplex diameter, radians
constexpr double kRecenterRadius = 0.5 * kPi;  // pass ends once the best vertex is this far out

using Vec3 = std::array<double, 3>;

struct GridPoint {
    MeasurementDirection dir;
    double value;
};

double dot(const Vec3 &a, const Vec3 &b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3 &a, const Vec3 &b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 combine(double x, const Vec3 &a, double y, const Vec3 &b) {
    return {x * a[0] + y * b[0], x * a[1] + y * b[1], x * a[2] + y * b[2]};
}

double norm(const Vec3 &a) { return std::sqrt(dot(a, a)); }

Vec3 scaled(const Vec3 &a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }

MeasurementDirection to_direction(const Vec3 &u) {
    double theta = std::acos(std::clamp(u[2] / norm(u), -1.0, 1.0));
    double phi = std::atan2(u[1], u[0]);
    if (phi < 0.0) {
        phi += 2.0 * kPi;
    }
    return {theta, phi};
}

// Component of v tangent to the sphere at c, normalized; zero if v is radial.
Vec3 tangent(const Vec3 &c, const Vec3 &v) {
    Vec3 t = combine(1.0, v, -dot(v, c), c);
    double n = norm(t);
    return n < 1e-12 ? Vec3{0.0, 0.0, 0.0} : scaled(t, 1.0 / n);
}

// Angle between the measurement axes, insensitive to u -> -u.
double axis_separation(const MeasurementDirection &a, const MeasurementDirection &b) {
    double d = std::abs(dot(a.axis(), b.axis()));
    return std::acos(std::min(d, 1.0));
}

// Nelder-Mead ascent in the tangent plane of the current point, restarted
// from the best vertex with a fresh simplex until a restart stops paying off.
// Restarts keep the simplex from collapsing on a ridge of a non-smooth
// objective.
class Refiner {
  public:
    Refiner(const DirectionObjective &objective, const SphereSearchOptions &options)
        : objective_(objective), options_(options) {}

    GridPoint refine(const GridPoint &seed) {
        budget_ = 0;
        Vec3 c = seed.dir.axis();
        double fc = objective_(seed.dir);
        double size = kPi / (options_.n_theta - 1);
        while (true) {
            Vertex best = simplex_ascent(c, fc, size);
            bool improved = best.value - fc >= options_.tolerance;
            if (best.value > fc) {
                c = best.point;
                fc = best.value;
            }
            if (!improved) {
                break;
            }
            size = std::max(best.travel, 1e-6);
        }
        return {to_direction(c), fc};
    }

    int iterations() const { return iterations_; }

  private:
    struct Vertex {
        double x = 0.0;
        double y = 0.0;
        double value = 0.0;
        Vec3 point{};
        double travel = 0.0;
    };

    double eval(const Vec3 &p) {
        if (++budget_ > options_.max_iterations) {
            throw Error(ErrorCode::OptimizerStall, "sphere refinement exceeded the iteration limit");
        }
        ++iterations_;
        return objective_(to_direction(p));
    }

    Vertex simplex_ascent(const Vec3 &c, double fc, double size) {
        Vec3 helper = std::abs(c[2]) < 0.9 ? Vec3{0.0, 0.0, 1.0} : Vec3{1.0, 0.0, 0.0};
        Vec3 e1 = tangent(c, cross(c, helper));
        Vec3 e2 = tangent(c, cross(c, e1));
        // Exponential map at c: chart radius is the geodesic distance, so
        // every point of the sphere sits at a finite chart position.
        auto make = [&](double x, double y) {
            double r = std::hypot(x, y);
            Vec3 p = c;
            if (r > 0.0) {
                p = combine(std::cos(r), c, std::sin(r) / r, combine(x, e1, y, e2));
                p = scaled(p, 1.0 / norm(p));
            }
            return Vertex{x, y, eval(p), p, 0.0};
        };
        std::array<Vertex, 3> v{Vertex{0.0, 0.0, fc, c, 0.0}, make(size, 0.0), make(0.0, size)};
        auto diameter = [&] {
            double d = 0.0;
            for (int i = 0; i < 3; ++i) {
                for (int j = i + 1; j < 3; ++j) {
                    d = std::max(d, std::hypot(v[i].x - v[j].x, v[i].y - v[j].y));
                }
            }
            return d;
        };
        while (diameter() > kSimplexTolerance) {
            std::sort(v.begin(), v.end(), [](const Vertex &a, const Vertex &b) { return a.value > b.value; });
            if (std::hypot(v[0].x, v[0].y) > kRecenterRadius) {
                break;
            }
            double mx = 0.5 * (v[0].x + v[1].x);
            double my = 0.5 * (v[0].y + v[1].y);
            Vertex r = make(2.0 * mx - v[2].x, 2.0 * my - v[2].y);
            if (r.value > v[0].value) {
                Vertex e = make(3.0 * mx - 2.0 * v[2].x, 3.0 * my - 2.0 * v[2].y);
                v[2] = e.value > r.value ? e : r;
            } else if (r.value > v[1].value) {
                v[2] = r;
            } else {
                bool outside = r.value > v[2].value;
                Vertex k = outside ? make(1.5 * mx - 0.5 * v[2].x, 1.5 * my - 0.5 * v[2].y)
                                   : make(0.5 * mx + 0.5 * v[2].x, 0.5 * my + 0.5 * v[2].y);
                if (k.value > std::max(r.value, v[2].value)) {
                    v[2] = k;
                } else {
                    for (int i = 1; i < 3; ++i) {
                        v[i] = make(0.5 * (v[0].x + v[i].x), 0.5 * (v[0].y + v[i].y));
                    }
                }
            }
        }
        Vertex best = *std::max_element(v.begin(), v.end(),
                                        [](const Vertex &a, const Vertex &b) { return a.value < b.value; });
        best.travel = std::hypot(best.x, best.y);
        return best;
    }

    const DirectionObjective &objective_;
    const SphereSearchOptions &options_;
    int iterations_ = 0;
    int budget_ = 0;
};

struct Grid {
    int n_theta;
    int n_phi;
    std::vector<GridPoint> points;

    const GridPoint &at(int i, int j) const {
        return points[static_cast<std::size_t>(i) * n_phi + ((j + n_phi) % n_phi)];
    }
};

Grid score_grid(const DirectionObjective &f, int nt, int np) {
    Grid grid{nt, np, {}};
    grid.points.reserve(static_cast<std::size_t>(nt) * np);
    for (int i = 0; i < nt; ++i) {
        double theta = kPi * i / (nt - 1);
        bool pole = (i == 0 || i == nt - 1);
        double pole_value = 0.0;
        for (int j = 0; j < np; ++j) {
            MeasurementDirection dir{theta, 2.0 * kPi * j / np};
            if (pole && j > 0) {
                grid.points.push_back({dir, pole_value});
                continue;
            }
            double v = f(dir);
            pole_value = v;
            grid.points.push_back({dir, v});
        }
    }
    return grid;
}

// Adds up to `count` seeds from the grid to `seeds`: local maxima first, best
// first, then the remaining points by value, each more than min_separation
// away from every seed already chosen.
void pick_seeds(const Grid &grid, int count, double min_separation, std::vector<GridPoint> &seeds) {
    const int nt = grid.n_theta;
    const int np = grid.n_phi;
    std::vector<std::size_t> candidates;
    for (int i = 0; i < nt; ++i) {
        bool pole = (i == 0 || i == nt - 1);
        for (int j = 0; j < (pole ? 1 : np); ++j) {
            double v = grid.at(i, j).value;
            bool peak = true;
            if (pole) {
                int ring = i == 0 ? 1 : nt - 2;
                for (int k = 0; k < np && peak; ++k) {
                    peak = v >= grid.at(ring, k).value;
                }
            } else {
                for (int di = -1; di <= 1 && peak; ++di) {
                    for (int dj = -1; dj <= 1 && peak; ++dj) {
                        if (di != 0 || dj != 0) {
                            peak = v >= grid.at(i + di, j + dj).value;
                        }
                    }
                }
            }
            if (peak) {
                candidates.push_back(static_cast<std::size_t>(i) * np + j);
            }
        }
    }
    auto by_value = [&](std::size_t a, std::size_t b) { return grid.points[a].value > grid.points[b].value; };
    std::stable_sort(candidates.begin(), candidates.end(), by_value);
    std::vector<std::size_t> order(grid.points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), by_value);
    candidates.insert(candidates.end(), order.begin(), order.end());

    int added = 0;
    for (std::size_t idx : candidates) {
        const GridPoint &candidate = grid.points[idx];
        bool distinct = std::all_of(seeds.begin(), seeds.end(), [&](const GridPoint &s) {
            return axis_separation(s.dir, candidate.dir) > min_separation;
        });
        if (distinct) {
            seeds.push_back(candidate);
            if (++added == count) {
                break;
            }
        }
    }
}

SphereSearchResult search(const DirectionObjective &objective, const DirectionObjective *screen,
                          const SphereSearchOptions &options) {
    if (options.n_theta < 3 || options.n_phi < 1 || options.n_seeds < 1) {
        throw Error(ErrorCode::ValidationError, "sphere grid is too small");
    }
    const double min_separation = 1.5 * kPi / (options.n_theta - 1);
    std::vector<GridPoint> seeds;
    Grid scored;
    if (screen == nullptr) {
        scored = score_grid(objective, options.n_theta, options.n_phi);
        pick_seeds(scored, options.n_seeds, min_separation, seeds);
    } else {
        // A coarse grid of the real objective ranks competing basins; the
        // fine screened grid adds seeds that the coarse one may straddle.
        scored = score_grid(objective, std::max(3, (options.n_theta - 1) / 4 + 1), std::max(1, options.n_phi / 4));
        pick_seeds(scored, options.n_seeds, min_separation, seeds);
        pick_seeds(score_grid(*screen, options.n_theta, options.n_phi), options.n_seeds, min_separation, seeds);
    }

    Refiner refiner(objective, options);
    std::vector<GridPoint> refined;
    for (const GridPoint &seed : seeds) {
        refined.push_back(refiner.refine(seed));
    }
    auto best_it = std::max_element(refined.begin(), refined.end(),
                                    [](const GridPoint &a, const GridPoint &b) { return a.value < b.value; });
    GridPoint best = *best_it;

    SphereSearchResult result;
    result.direction = canonicalize(best.dir);
    result.value = best.value;
    result.iterations = refiner.iterations();

    const double best_angle = measurement_angle(result.direction);
    auto rivals = [&](const GridPoint &p) {
        return p.value >= best.value - options.tie_tolerance &&
               std::abs(measurement_angle(p.dir) - best_angle) > options.tie_angle;
    };
    result.tie = std::any_of(refined.begin(), refined.end(), rivals) ||
                 std::any_of(scored.points.begin(), scored.points.end(), rivals);
    return result;
}

}  // namespace

SphereSearchResult maximize_on_sphere(const DirectionObjective &objective,
                                      const SphereSearchOptions &options) {
    return search(objective, nullptr, options);
}

SphereSearchResult maximize_on_sphere(const DirectionObjective &objective, const DirectionObjective &screen,
                                      const SphereSearchOptions &options) {
    return search(objective, &screen, options);
}

SphereSearchResult minimize_on_sphere(const DirectionObjective &objective,
                                      const SphereSearchOptions &options) {
    SphereSearchResult r =
        maximize_on_sphere([&](const MeasurementDirection &d) { return -objective(d); }, options);
    r.value = -r.value;
    return r;
}

}  // namespace gqd
