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

#ifndef OBSPLACE_TESTS_TEST_SUPPORT_H_
#define OBSPLACE_TESTS_TEST_SUPPORT_H_

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "obsplace/graph.h"
#include "obsplace/sparsity.h"

namespace obsplace::testing {

inline std::string DataPath(const std::string& name) {
  return std::string(OBSPLACE_TEST_DATA_DIR) + "/" + name;
}

// The six-state, two-output running example. States and outputs 0-based.
inline StructuredSystem ExampleSystem() {
  // (row i, col j) means v_{j+1} -> v_{i+1}.
  SparsityPattern a(6, 6,
                    {{0, 4}, {1, 0}, {2, 0}, {3, 2}, {3, 3}, {4, 2}, {4, 3},
                     {5, 1}});
  SparsityPattern c(2, 6, {{0, 1}, {0, 5}, {1, 4}});
  return StructuredSystem(std::move(a), std::move(c));
}

// Five-state digraph v1->v2, v2->v1, v2->v3, v3->v4, v4->v5, v5->v1, v5->v3.
inline SparsityPattern FiveStateDigraph() {
  return SparsityPattern(
      5, 5, {{1, 0}, {0, 1}, {2, 1}, {3, 2}, {4, 3}, {0, 4}, {2, 4}});
}

// Each entry present independently with probability `density`.
inline SparsityPattern RandomPattern(std::mt19937_64& rng, int rows, int cols,
                                     double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Entry> entries;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (coin(rng)) entries.push_back({i, j});
    }
  }
  return SparsityPattern(rows, cols, std::move(entries));
}

struct RandomSystemOptions {
  int min_states = 1;
  int max_states = 8;
  int min_outputs = 1;
  int max_outputs = 6;
  bool self_loops = true;
  double a_density = 0.25;
  double c_density = 0.3;
};

// Every output row gets at least one entry so no candidate is inert by
// construction.
inline StructuredSystem RandomSystem(std::mt19937_64& rng,
                                     const RandomSystemOptions& opt = {}) {
  const int d =
      std::uniform_int_distribution<int>(opt.min_states, opt.max_states)(rng);
  const int p =
      std::uniform_int_distribution<int>(opt.min_outputs, opt.max_outputs)(rng);
  std::bernoulli_distribution a_coin(opt.a_density);
  std::bernoulli_distribution c_coin(opt.c_density);
  std::uniform_int_distribution<int> state(0, d - 1);
  std::vector<Entry> a;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if ((i == j && opt.self_loops) || a_coin(rng)) a.push_back({i, j});
    }
  }
  std::vector<Entry> c;
  for (int i = 0; i < p; ++i) {
    bool any = false;
    for (int j = 0; j < d; ++j) {
      if (c_coin(rng)) {
        c.push_back({i, j});
        any = true;
      }
    }
    if (!any) c.push_back({i, state(rng)});
  }
  return StructuredSystem(SparsityPattern(d, d, std::move(a)),
                          SparsityPattern(p, d, std::move(c)));
}

inline BipartiteGraph RandomBipartite(std::mt19937_64& rng, int max_left,
                                      int max_right) {
  const int l = std::uniform_int_distribution<int>(0, max_left)(rng);
  const int r = std::uniform_int_distribution<int>(0, max_right)(rng);
  const double density = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < r; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return BipartiteGraph(l, r, std::move(edges));
}

// All subsets of {0..n-1} as ascending index lists, bitmask order.
inline std::vector<std::vector<int>> AllSubsets(int n) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1u) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace obsplace::testing

#endif  // OBSPLACE_TESTS_TEST_SUPPORT_H_
