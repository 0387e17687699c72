// Copyright 2026 The qhdrg Authors
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


// Serial reference against the OpenMP kernels, plus decode cost against L.

#include <benchmark/benchmark.h>

#include <vector>

#include "qhdrg/montecarlo.h"

using namespace qhdrg;

namespace {

std::vector<CellSpec> bench_cells(std::uint32_t d, int depth) {
    std::vector<CellSpec> cells;
    for (int L : {6, 10}) {
        for (double p : {0.01, 0.02, 0.03}) {
            cells.push_back({d, L, L, p, depth});
        }
    }
    return cells;
}

void BM_batch_serial(benchmark::State &state) {
    const auto cells = bench_cells(static_cast<std::uint32_t>(state.range(0)), static_cast<int>(state.range(1)));
    const std::size_t trials = 100;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_batch_serial(cells, trials, 1));
    }
    state.SetItemsProcessed(state.iterations() * cells.size() * trials);
}

void BM_batch_openmp(benchmark::State &state) {
    const auto cells = bench_cells(static_cast<std::uint32_t>(state.range(0)), static_cast<int>(state.range(1)));
    const std::size_t trials = 100;
    const int threads = static_cast<int>(state.range(2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_batch(cells, trials, 1, threads));
    }
    state.SetItemsProcessed(state.iterations() * cells.size() * trials);
}

void BM_percolation_serial(benchmark::State &state) {
    const auto cells = bench_cells(7919, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_percolation_batch_serial(cells, 100, 1));
    }
    state.SetItemsProcessed(state.iterations() * cells.size() * 100);
}

void BM_percolation_openmp(benchmark::State &state) {
    const auto cells = bench_cells(7919, 0);
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_percolation_batch(cells, 100, 1, threads));
    }
    state.SetItemsProcessed(state.iterations() * cells.size() * 100);
}

void BM_trial(benchmark::State &state) {
    const int L = static_cast<int>(state.range(0));
    const CellSpec cell{2, L, L, 0.01, 0};
    const std::uint64_t seed = cell_seed(1, cell);
    std::uint64_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_trial({cell, seed, k++}));
    }
    state.SetComplexityN(L);
}

}  // namespace

BENCHMARK(BM_batch_serial)->Args({2, 0})->Args({7919, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_batch_openmp)->Args({2, 0, 1})->Args({2, 0, 0})->Args({7919, 4, 1})->Args({7919, 4, 0})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_percolation_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_percolation_openmp)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_trial)->RangeMultiplier(2)->Range(8, 64)->Complexity()->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
