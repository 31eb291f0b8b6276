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


#include <benchmark/benchmark.h>

#include "gqd/discord.hpp"
#include "gqd/states.hpp"
#include "gqd/sudden_change.hpp"
#include "gqd/thermal_channel.hpp"

namespace {

const gqd::ReservoirConfig kTwoSided{0.6, 1.0, 1.0, gqd::Topology::TwoSided};

gqd::DensityMatrix4 evolved(double t) { return gqd::evolve_pair(gqd::psi_alpha_state(0.7), kTwoSided, t); }

void BM_EvolvePair(benchmark::State &state) {
    gqd::DensityMatrix4 rho0 = gqd::psi_alpha_state(0.7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gqd::evolve_pair(rho0, kTwoSided, 0.4));
    }
}
BENCHMARK(BM_EvolvePair);

void BM_TddXState(benchmark::State &state) {
    gqd::DensityMatrix4 rho = evolved(0.4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gqd::tdd_x_state(rho));
    }
}
BENCHMARK(BM_TddXState);

void BM_HddClosedForm(benchmark::State &state) {
    gqd::DensityMatrix4 rho = evolved(0.4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gqd::hdd_closed_form(rho));
    }
}
BENCHMARK(BM_HddClosedForm);

void BM_BddViaFidelity(benchmark::State &state) {
    gqd::DensityMatrix4 rho = evolved(0.4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gqd::bdd_via_fidelity(rho));
    }
}
BENCHMARK(BM_BddViaFidelity)->Unit(benchmark::kMillisecond);

void BM_BddOracle(benchmark::State &state) {
    gqd::DensityMatrix4 rho = evolved(0.4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gqd::bdd_oracle(rho));
    }
}
BENCHMARK(BM_BddOracle)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_TrajectoryPoint(benchmark::State &state) {
    gqd::ScanConfig scan;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gqd::evaluate_point(0.7, kTwoSided, scan, 0.4));
    }
}
BENCHMARK(BM_TrajectoryPoint)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
