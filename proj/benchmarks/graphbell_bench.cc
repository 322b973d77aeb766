// Copyright 2026 The graphbell Authors
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


#include <random>

#include "benchmark/benchmark.h"

#include "graphbell/bell_search.h"
#include "graphbell/catalog.h"
#include "graphbell/lhv.h"
#include "graphbell/state_vector.h"

using namespace graphbell;

namespace {

void BM_stabilizer_group(benchmark::State &state) {
    auto g = catalog_lookup("no19");
    for (auto _ : state) {
        benchmark::DoNotOptimize(stabilizer_group(g));
    }
}
BENCHMARK(BM_stabilizer_group);

void BM_classical_bound(benchmark::State &state) {
    auto g = catalog_lookup(state.range(0) == 5 ? "rc5" : "rc6");
    auto group = std::make_shared<const StabilizerGroup>(stabilizer_group(g));
    std::mt19937_64 rng(1);
    std::vector<BellOperator> ops;
    for (int k = 0; k < 64; k++) {
        std::vector<uint32_t> masks;
        for (uint32_t m = 1; m < group->size(); m++) {
            if (rng() % 2) {
                masks.push_back(m);
            }
        }
        ops.emplace_back(group, masks);
    }
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(classical_bound(ops[i++ % ops.size()]));
    }
}
BENCHMARK(BM_classical_bound)->Arg(5)->Arg(6);

void BM_state_vector(benchmark::State &state) {
    auto g = catalog_lookup("no19");
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_state_vector(g));
    }
}
BENCHMARK(BM_state_vector);

void BM_search_symmetric(benchmark::State &state, const char *graph) {
    auto g = catalog_lookup(graph);
    for (auto _ : state) {
        benchmark::DoNotOptimize(search_symmetric(g));
    }
}
BENCHMARK_CAPTURE(BM_search_symmetric, rc6, "rc6")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_search_symmetric, e6, "e6")->Unit(benchmark::kMillisecond);

void BM_search_exhaustive(benchmark::State &state, const char *graph) {
    auto g = catalog_lookup(graph);
    for (auto _ : state) {
        benchmark::DoNotOptimize(search_exhaustive(g));
    }
}
BENCHMARK_CAPTURE(BM_search_exhaustive, lc4, "lc4")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_search_exhaustive, rc5, "rc5")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
