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

#include "obsplace/output_sets.h"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "obsplace/graph.h"
#include "obsplace/matching.h"
#include "obsplace/oracle.h"
#include "obsplace/sparsity.h"
#include "test_support.h"

namespace obsplace {
namespace {

using ::obsplace::testing::AllSubsets;
using ::obsplace::testing::ExampleSystem;
using ::obsplace::testing::RandomSystem;
using ::obsplace::testing::RandomSystemOptions;

using Set = std::vector<int>;

// 1-based to 0-based.
Set V(std::initializer_list<int> ids) {
  Set s;
  for (int i : ids) s.push_back(i - 1);
  return s;
}

TEST(ComputeOutputSetsTest, ExampleSets) {
  const SystemDigraph g = BuildDigraph(ExampleSystem());
  const OutputSetFamily f = ComputeOutputSets(g, std::vector<int>{0, 1}, 3);
  EXPECT_EQ(f.Get(0, 1), V({2, 6}));
  EXPECT_EQ(f.Get(0, 2), V({1, 2}));
  EXPECT_EQ(f.Get(0, 3), V({1, 5}));
  EXPECT_EQ(f.Get(1, 1), V({5}));
  EXPECT_EQ(f.Get(1, 2), V({3, 4}));
  EXPECT_EQ(f.Get(1, 3), V({1, 3, 4}));
  EXPECT_EQ(f.ForOutput(1, 2), V({3, 4}));
  EXPECT_EQ(f.size(), 6);
}

TEST(ComputeOutputSetsTest, IsolatedOutputIsEmptyAtEveryStep) {
  const StructuredSystem s(SparsityPattern::Identity(3),
                           SparsityPattern(2, 3, {{0, 1}}));
  const OutputSetFamily f =
      ComputeOutputSets(BuildDigraph(s), std::vector<int>{1}, 3);
  for (int k = 1; k <= 3; ++k) EXPECT_TRUE(f.Get(0, k).empty());
}

TEST(ComputeOutputSetsTest, SelfLoopStaysAtEveryStep) {
  const StructuredSystem s(SparsityPattern(3, 3, {{1, 1}, {2, 0}}),
                           SparsityPattern(1, 3, {{0, 1}}));
  const OutputSetFamily f =
      ComputeOutputSets(BuildDigraph(s), std::vector<int>{0}, 3);
  for (int k = 1; k <= 3; ++k) {
    EXPECT_TRUE(std::binary_search(f.Get(0, k).begin(), f.Get(0, k).end(), 1));
  }
}

TEST(ComputeOutputSetsTest, HorizonOutOfRange) {
  const SystemDigraph g = BuildDigraph(ExampleSystem());
  EXPECT_THROW(ComputeOutputSets(g, std::vector<int>{0}, 0), std::out_of_range);
  EXPECT_THROW(ComputeOutputSets(g, std::vector<int>{0}, 7), std::out_of_range);
  EXPECT_THROW(Xi(g, std::vector<int>{0}, 7), std::out_of_range);
}

TEST(ComputeOutputSetsTest, MatchesWalkRelationComposition) {
  std::mt19937_64 rng(301);
  RandomSystemOptions opt;
  opt.self_loops = false;
  opt.a_density = 0.3;
  for (int trial = 0; trial < 200; ++trial) {
    const StructuredSystem s = RandomSystem(rng, opt);
    const SystemDigraph g = BuildDigraph(s);
    const int d = s.num_states();
    for (int o = 0; o < s.num_outputs(); ++o) {
      const OutputSetFamily f = ComputeOutputSets(g, std::vector<int>{o}, d);
      const auto reference = oracle::ReferenceOutputSets(s, o, d);
      for (int k = 1; k <= d; ++k) {
        EXPECT_EQ(f.Get(0, k), reference[k - 1])
            << "trial " << trial << " output " << o << " step " << k;
      }
    }
  }
}

TEST(OutputSetCacheTest, SharesStorageButMatchesFamily) {
  std::mt19937_64 rng(302);
  for (int trial = 0; trial < 100; ++trial) {
    const StructuredSystem s = RandomSystem(rng);
    const SystemDigraph g = BuildDigraph(s);
    const int d = s.num_states();
    OutputSetCache cache(g, d);
    for (int o = 0; o < s.num_outputs(); ++o) {
      const OutputSetFamily f = ComputeOutputSets(g, std::vector<int>{o}, d);
      const auto& sets = cache.Sets(o);
      ASSERT_EQ(static_cast<int>(sets.size()), d);
      for (int k = 1; k <= d; ++k) {
        EXPECT_EQ(Set(sets[k - 1].begin(), sets[k - 1].end()), f.Get(0, k));
      }
      EXPECT_LE(cache.DistinctCount(o), d);
    }
  }
}

TEST(BuildPlacementBipartiteTest, ExampleHasTwelveEdges) {
  const SystemDigraph g = BuildDigraph(ExampleSystem());
  const OutputSetFamily f = ComputeOutputSets(g, std::vector<int>{0, 1}, 3);
  const BipartiteGraph b = BuildPlacementBipartite(6, f);
  EXPECT_EQ(b.num_left(), 6);
  EXPECT_EQ(b.num_right(), 6);
  EXPECT_EQ(b.num_edges(), 12);
  // Right vertex 0 is Y_1(1) = {v2, v6}.
  EXPECT_TRUE(b.HasEdge(1, 0));
  EXPECT_TRUE(b.HasEdge(5, 0));
  EXPECT_EQ(oracle::BruteForceMaximumMatchingSize(b), 6);
}

TEST(BuildPlacementBipartiteTest, TrivialFamilies) {
  const StructuredSystem blank(SparsityPattern::Empty(3, 3),
                               SparsityPattern::Empty(1, 3));
  const OutputSetFamily empty =
      ComputeOutputSets(BuildDigraph(blank), std::vector<int>{0}, 3);
  const BipartiteGraph b0 = BuildPlacementBipartite(3, empty);
  EXPECT_EQ(b0.num_edges(), 0);
  EXPECT_EQ(b0.num_right(), 3);

  const StructuredSystem one(SparsityPattern(1, 1, {{0, 0}}),
                             SparsityPattern(1, 1, {{0, 0}}));
  // d = 1 caps the horizon, so build the two-step family by hand.
  const OutputSetFamily two(1, {0}, 2, {{0}, {0}});
  const BipartiteGraph b1 = BuildPlacementBipartite(1, two);
  EXPECT_EQ(b1.num_edges(), 2);
  EXPECT_EQ(Xi(BuildDigraph(one), std::vector<int>{0}, 1), 1);
}

TEST(XiTest, ExampleValues) {
  const SystemDigraph g = BuildDigraph(ExampleSystem());
  EXPECT_EQ(Xi(g, std::vector<int>{0, 1}, 3), 6);
  EXPECT_EQ(Xi(g, std::vector<int>{1}, 3), 3);
  EXPECT_EQ(Xi(g, std::vector<int>{0}, 3), 3);
  EXPECT_EQ(Xi(g, std::vector<int>{}, 3), 0);
}

TEST(XiTest, AgreesWithReferenceAndCapped) {
  std::mt19937_64 rng(303);
  RandomSystemOptions opt;
  opt.self_loops = false;
  opt.max_outputs = 4;
  for (int trial = 0; trial < 100; ++trial) {
    const StructuredSystem s = RandomSystem(rng, opt);
    const SystemDigraph g = BuildDigraph(s);
    const int d = s.num_states();
    for (int l = 1; l <= d; ++l) {
      for (const Set& subset : AllSubsets(s.num_outputs())) {
        const int xi = Xi(g, subset, l);
        EXPECT_EQ(xi, oracle::ReferenceXi(s, subset, l));
        EXPECT_LE(xi, std::min<int>(d, l * static_cast<int>(subset.size())));
      }
    }
  }
}

// Exhaustive monotonicity and diminishing returns over S subset T, v not in T.
TEST(XiTest, MonotoneSubmodular) {
  std::mt19937_64 rng(304);
  RandomSystemOptions opt;
  opt.self_loops = false;
  opt.max_outputs = 5;
  opt.a_density = 0.3;
  for (int trial = 0; trial < 60; ++trial) {
    const StructuredSystem s = RandomSystem(rng, opt);
    const SystemDigraph g = BuildDigraph(s);
    const int p = s.num_outputs();
    const int d = s.num_states();
    for (int l : {1, (d + 1) / 2, d}) {
      std::vector<int> value(1 << p);
      for (int mask = 0; mask < (1 << p); ++mask) {
        Set subset;
        for (int o = 0; o < p; ++o) {
          if (mask >> o & 1) subset.push_back(o);
        }
        value[mask] = Xi(g, subset, l);
      }
      for (int t = 0; t < (1 << p); ++t) {
        for (int sm = t;; sm = (sm - 1) & t) {
          EXPECT_LE(value[sm], value[t]);
          for (int v = 0; v < p; ++v) {
            if (t >> v & 1) continue;
            EXPECT_GE(value[sm | 1 << v] - value[sm],
                      value[t | 1 << v] - value[t]);
          }
          if (sm == 0) break;
        }
      }
    }
  }
}

}  // namespace
}  // namespace obsplace
