// Copyright 2026 The qdyn Authors
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

// Serial reference vs OpenMP kernels: the measurement-grid scan and the
// row-parallel sweep.

#include <benchmark/benchmark.h>

#include <cmath>

#include "qdyn/dynamics.hpp"

namespace {

using namespace qdyn;

// Roughly the cost profile of one two-side grid point.
double grid_objective(std::size_t i) {
    const double x = static_cast<double>(i) * 1e-3;
    double s = 0.0;
    for (int k = 1; k <= 4; ++k) s += std::log2(1.0 + 0.25 * std::cos(k * x)) * std::sin(x / k);
    return s;
}

void BM_GridArgmaxSerial(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(grid_argmax_serial(n, grid_objective));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_GridArgmaxParallel(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(grid_argmax_parallel(n, grid_objective));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_GridArgmaxSerial)->Arg(2048)->Arg(262144)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridArgmaxParallel)->Arg(2048)->Arg(262144)->Unit(benchmark::kMillisecond);

void BM_TwoSideClassical(benchmark::State &state) {
    const auto rho = bell_diagonal_state({0.3, -0.5, 0.1});
    OptimizerSettings settings;
    settings.parallel = state.range(0) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(two_side_classical(rho, settings).value);
}
BENCHMARK(BM_TwoSideClassical)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

SweepConfig bench_config() {
    SweepConfig config;
    config.channel = ChannelKind::AmplitudeDamping;
    config.initial = BellDiagonalParams{-0.5, -0.5, -0.5};
    config.p_grid = uniform_p_grid(11);
    config.partitions = {BipartitionLabel::AB, BipartitionLabel::EaEb};
    return config;
}

void BM_SweepSerial(benchmark::State &state) {
    const auto config = bench_config();
    for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(config));
}

void BM_SweepParallel(benchmark::State &state) {
    const auto config = bench_config();
    for (auto _ : state) benchmark::DoNotOptimize(sweep(config));
}

BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
