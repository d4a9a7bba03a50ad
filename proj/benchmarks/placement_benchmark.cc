// Copyright 2026 The obsplace Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "benchmark/benchmark.h"
#include "obsplace/graph.h"
#include "obsplace/grid_model.h"
#include "obsplace/matching.h"
#include "obsplace/output_sets.h"
#include "obsplace/placement.h"
#include "obsplace/sparsity.h"

namespace obsplace {
namespace {

StructuredSystem GridWithIdentityOutputs() {
  const GridModel model = BuildGridSystem(ReadGridTopologyFile(
      std::string(OBSPLACE_BENCH_DATA_DIR) + "/ieee118.grid"));
  const int d = model.system.num_states();
  return StructuredSystem(model.system.a(), SparsityPattern::Identity(d));
}

const StructuredSystem& Grid() {
  static const StructuredSystem grid = GridWithIdentityOutputs();
  return grid;
}

void BM_GridMinSensorGreedy(benchmark::State& state) {
  const int horizon = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(MinSensorGreedy(Grid(), horizon));
  }
}
BENCHMARK(BM_GridMinSensorGreedy)
    ->Arg(1)->Arg(5)->Arg(35)->Arg(100)
    ->Unit(benchmark::kMillisecond);

void BM_GridMinSensorGreedyEager(benchmark::State& state) {
  const int horizon = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        MinSensorGreedy(Grid(), horizon, {}, {GainEvaluation::kEager}));
  }
}
BENCHMARK(BM_GridMinSensorGreedyEager)->Arg(35)->Unit(benchmark::kMillisecond);

void BM_GridMaxCoverageGreedy(benchmark::State& state) {
  const int budget = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(MaxCoverageGreedy(Grid(), budget));
  }
}
BENCHMARK(BM_GridMaxCoverageGreedy)->Arg(1)->Arg(14)
    ->Unit(benchmark::kMillisecond);

void BM_GridOutputSets(benchmark::State& state) {
  const SystemDigraph g = BuildDigraph(Grid());
  const int horizon = static_cast<int>(state.range(0));
  for (auto _ : state) {
    OutputSetCache cache(g, horizon);
    benchmark::DoNotOptimize(cache.Sets(0));
  }
}
BENCHMARK(BM_GridOutputSets)->Arg(35)->Arg(407);

BipartiteGraph RandomGraph(int n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return BipartiteGraph(n, n, std::move(edges));
}

void BM_MaximumMatching(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BipartiteGraph g = RandomGraph(n, 4.0 / n, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(MaximumMatching(g).size());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_MaximumMatching)->RangeMultiplier(4)->Range(64, 4096)
    ->Complexity();

}  // namespace
}  // namespace obsplace

BENCHMARK_MAIN();
