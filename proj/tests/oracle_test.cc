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

#include "obsplace/oracle.h"

#include <algorithm>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "obsplace/errors.h"
#include "obsplace/graph.h"
#include "obsplace/matching.h"
#include "obsplace/output_sets.h"
#include "obsplace/placement.h"
#include "obsplace/sparsity.h"
#include "test_support.h"

namespace obsplace::oracle {
namespace {

using ::obsplace::testing::ExampleSystem;
using ::obsplace::testing::RandomSystem;
using ::obsplace::testing::RandomSystemOptions;

constexpr std::uint64_t kSmallPrime = 101;

int CountNonzero(const std::vector<std::uint64_t>& values) {
  return static_cast<int>(
      std::count_if(values.begin(), values.end(),
                    [](std::uint64_t x) { return x != 0; }));
}

TEST(RandomRealizationTest, SupportMatchesPattern) {
  const StructuredSystem example = ExampleSystem();
  const NumericRealization r = RandomRealization(example, 7);
  EXPECT_EQ(CountNonzero(r.a_values), 8);
  EXPECT_EQ(CountNonzero(r.c_values), 3);
  for (const Entry& e : example.a().entries()) EXPECT_NE(r.a(e.row, e.col), 0u);
  for (std::uint64_t x : r.a_values) EXPECT_LT(x, r.modulus);

  const StructuredSystem id(SparsityPattern::Identity(4),
                            SparsityPattern::Identity(4));
  const NumericRealization d = RandomRealization(id, 3);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) EXPECT_EQ(d.a(i, j) != 0, i == j);
  }
}

TEST(RandomRealizationTest, DeterministicPerSeed) {
  const StructuredSystem example = ExampleSystem();
  EXPECT_EQ(RandomRealization(example, 11).a_values,
            RandomRealization(example, 11).a_values);
  EXPECT_NE(RandomRealization(example, 11).a_values,
            RandomRealization(example, 12).a_values);
}

TEST(FieldRankTest, SmallMatrices) {
  EXPECT_EQ(FieldRank({{1, 2}, {2, 4}}, 2, kSmallPrime), 1);
  EXPECT_EQ(FieldRank({{1, 2}, {3, 4}}, 2, kSmallPrime), 2);
  EXPECT_EQ(FieldRank({}, 3, kSmallPrime), 0);
  // 1*100 - 1*1 = 99 and 99 * 1 = 99: rows proportional mod 101.
  EXPECT_EQ(FieldRank({{1, 100}, {100, 1}}, 2, kSmallPrime), 1);
}

// Blocks built by repeated products must equal C * A^b computed naively.
TEST(ObservabilityMatrixTest, BlocksArePowers) {
  const NumericRealization r = RandomRealization(ExampleSystem(), 5, kSmallPrime);
  const ObservabilityMatrixView o = BuildObservabilityMatrix(r, 3);
  const int d = 6;
  const int p = 2;
  ASSERT_EQ(static_cast<int>(o.rows.size()), 3 * p);
  std::vector<std::vector<std::uint64_t>> block(p, std::vector<std::uint64_t>(d));
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < d; ++j) block[i][j] = r.c(i, j);
  }
  for (int b = 0; b < 3; ++b) {
    for (int i = 0; i < p; ++i) EXPECT_EQ(o.rows[b * p + i], block[i]);
    std::vector<std::vector<std::uint64_t>> next(p,
                                                 std::vector<std::uint64_t>(d));
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < d; ++j) {
        std::uint64_t acc = 0;
        for (int m = 0; m < d; ++m) acc = (acc + block[i][m] * r.a(m, j)) % kSmallPrime;
        next[i][j] = acc;
      }
    }
    block = next;
  }
}

TEST(NumericIndexTest, Examples) {
  const StructuredSystem id(SparsityPattern::Identity(5),
                            SparsityPattern::Identity(5));
  EXPECT_EQ(NumericObservabilityIndex(RandomRealization(id, 1)), 1);
  for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
    EXPECT_EQ(NumericObservabilityIndex(RandomRealization(ExampleSystem(), seed)),
              3);
  }
  const StructuredSystem stray(SparsityPattern(2, 2, {{0, 0}, {1, 1}}),
                               SparsityPattern(1, 2, {{0, 0}}));
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    EXPECT_EQ(NumericObservabilityIndex(RandomRealization(stray, seed)),
              std::nullopt);
  }
}

// Row (i, b) of C A^b is supported on Y_i(b + 1), so the rank is bounded by
// the matching size in every field. Equality is the generic case.
TEST(NumericIndexTest, RankBoundedByMatching) {
  std::mt19937_64 rng(501);
  int pairs = 0;
  int equal = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const StructuredSystem s = RandomSystem(rng);
    const SystemDigraph g = BuildDigraph(s);
    const int d = s.num_states();
    std::vector<int> all(s.num_outputs());
    for (int o = 0; o < s.num_outputs(); ++o) all[o] = o;
    const std::vector<int> ranks =
        ObservabilityRankProfile(RandomRealization(s, 1000 + trial), d);
    for (int k = 1; k <= d; ++k) {
      const int xi = Xi(g, all, k);
      EXPECT_LE(ranks[k - 1], xi) << "trial " << trial << " k " << k;
      ++pairs;
      equal += ranks[k - 1] == xi ? 1 : 0;
    }
  }
  RecordProperty("rank_equals_matching", equal);
  RecordProperty("pairs", pairs);
}

TEST(BruteForceMinSensorsTest, Examples) {
  EXPECT_EQ(BruteForceMinSensors(ExampleSystem(), 3),
            (std::vector<int>{0, 1}));
  EXPECT_EQ(BruteForceMinSensors(ExampleSystem(), 3, std::vector<int>{0}),
            std::nullopt);
  const StructuredSystem id(SparsityPattern::Identity(4),
                            SparsityPattern::Identity(4));
  EXPECT_EQ(BruteForceMinSensors(id, 1), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_THROW(BruteForceMinSensors(id, 1, {}, 3), CapExceededError);
}

TEST(BruteForceMaxCoverageTest, Examples) {
  EXPECT_EQ(BruteForceMaxCoverage(ExampleSystem(), 2).xi, 6);
  EXPECT_THROW(BruteForceMaxCoverage(ExampleSystem(), 0), std::out_of_range);
  EXPECT_THROW(BruteForceMaxCoverage(ExampleSystem(), 2, 1), CapExceededError);
}

TEST(BruteForceTest, NeverBeatenByGreedy) {
  std::mt19937_64 rng(502);
  for (int trial = 0; trial < 150; ++trial) {
    const StructuredSystem s = RandomSystem(rng);
    const int l = std::uniform_int_distribution<int>(1, s.num_states())(rng);
    const PlacementResult greedy = MinSensorGreedy(s, l);
    const auto best = BruteForceMinSensors(s, l);
    if (best) EXPECT_GE(greedy.selected.size(), best->size());
    const int r = std::uniform_int_distribution<int>(1, s.num_outputs())(rng);
    EXPECT_LE(MaxCoverageGreedy(s, r).final_xi, BruteForceMaxCoverage(s, r).xi);
  }
}

TEST(ExhaustiveContractionTest, Examples) {
  EXPECT_TRUE(ExhaustiveContractionCheck(BuildDigraph(ExampleSystem())));
  EXPECT_FALSE(ExhaustiveContractionCheck(BuildDigraph(StructuredSystem(
      SparsityPattern::Empty(1, 1), SparsityPattern::Empty(1, 1)))));
  EXPECT_TRUE(ExhaustiveContractionCheck(BuildDigraph(StructuredSystem(
      SparsityPattern::Identity(6), SparsityPattern::Empty(1, 6)))));
  EXPECT_THROW(ExhaustiveContractionCheck(
                   BuildDigraph(StructuredSystem(SparsityPattern::Identity(17),
                                                 SparsityPattern::Empty(1, 17)))),
               CapExceededError);
}

TEST(BruteForceMatchingTest, CapAndExample) {
  const SystemDigraph g = BuildDigraph(ExampleSystem());
  const BipartiteGraph b = BuildPlacementBipartite(
      6, ComputeOutputSets(g, std::vector<int>{1}, 3));
  EXPECT_EQ(BruteForceMaximumMatchingSize(b), 3);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 21; ++i) edges.emplace_back(i, i);
  EXPECT_THROW(BruteForceMaximumMatchingSize(BipartiteGraph(21, 21, edges)),
               CapExceededError);
}

}  // namespace
}  // namespace obsplace::oracle
