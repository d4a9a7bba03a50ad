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

#ifndef OBSPLACE_ORACLE_H_
#define OBSPLACE_ORACLE_H_

// Ground-truth engines used to validate the polynomial-time routines. Every
// routine here takes an independent path: output sets by relation
// composition, matchings by exhaustive search or plain augmenting loops, and
// observability indices by exact rank over a prime field.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "obsplace/graph.h"
#include "obsplace/matching.h"
#include "obsplace/sparsity.h"

namespace obsplace::oracle {

// 2^61 - 1.
inline constexpr std::uint64_t kDefaultModulus = (std::uint64_t{1} << 61) - 1;
inline constexpr std::uint64_t kDefaultSeed = 20260101;
inline constexpr int kDefaultOutputCap = 20;
inline constexpr int kDefaultStateCap = 16;
inline constexpr int kMatchingCap = 20;

// Field values for the star entries of a system; zero elsewhere. Row-major.
struct NumericRealization {
  int num_states = 0;
  int num_outputs = 0;
  std::uint64_t modulus = kDefaultModulus;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> a_values;  // d x d
  std::vector<std::uint64_t> c_values;  // p x d

  std::uint64_t a(int row, int col) const {
    return a_values[static_cast<size_t>(row) * num_states + col];
  }
  std::uint64_t c(int row, int col) const {
    return c_values[static_cast<size_t>(row) * num_states + col];
  }
};

// Rows of C, CA, ..., CA^(k-1) over the realization's field.
struct ObservabilityMatrixView {
  int horizon = 0;
  int num_states = 0;
  std::vector<std::vector<std::uint64_t>> rows;  // block b occupies rows [b p, (b+1) p)
};

// Star entries drawn uniformly from the nonzero field elements.
NumericRealization RandomRealization(const StructuredSystem& system,
                                     std::uint64_t seed,
                                     std::uint64_t modulus = kDefaultModulus);

// Block b is built as (block b-1) * A, never forming A^b.
ObservabilityMatrixView BuildObservabilityMatrix(
    const NumericRealization& realization, int horizon);

// Rank by Gaussian elimination modulo `modulus` (a prime).
int FieldRank(std::vector<std::vector<std::uint64_t>> rows, int num_cols,
              std::uint64_t modulus);

// Smallest k in [1, d] with rank O^k = d; nullopt if none.
std::optional<int> NumericObservabilityIndex(
    const NumericRealization& realization);

// Rank of O^k for every k = 1..horizon (entry k-1).
std::vector<int> ObservabilityRankProfile(
    const NumericRealization& realization, int horizon);

// Y_output(k), k = 1..horizon, as the walk relation R^k restricted to the
// output's sources: R is built from A as a boolean matrix and composed k - 1
// times. Sorted.
std::vector<std::vector<int>> ReferenceOutputSets(
    const StructuredSystem& system, int output, int horizon);

// Maximum matching size by a plain per-vertex augmenting loop.
int KuhnMatchingSize(const BipartiteGraph& graph);

// Xi through ReferenceOutputSets and KuhnMatchingSize.
int ReferenceXi(const StructuredSystem& system, std::span<const int> outputs,
                int horizon);

// Contraction-freeness of G(A, C(outputs)) through a Kuhn matching on the
// out-neighbour sets.
bool ReferenceContractionFree(const StructuredSystem& system,
                              std::span<const int> outputs);

bool ReferenceIndexBoundedBy(const StructuredSystem& system,
                             std::span<const int> outputs, int horizon);

// Exact maximum matching size by dynamic programming over subsets of the
// smaller side. Throws CapExceededError when that side exceeds kMatchingCap.
int BruteForceMaximumMatchingSize(const BipartiteGraph& graph);

// Breadth-first alternating-path search from every free left vertex.
bool HasAugmentingPath(const BipartiteGraph& graph, const Matching& matching);

// Checks |N+(S)| >= |S| for all 2^d state subsets. Throws CapExceededError
// when d > cap.
bool ExhaustiveContractionCheck(const SystemDigraph& digraph,
                                int cap = kDefaultStateCap);

// Smallest admissible output set with ReferenceIndexBoundedBy, scanning
// subsets by cardinality and then lexicographically. nullopt if none exists.
// Throws CapExceededError when p > cap.
std::optional<std::vector<int>> BruteForceMinSensors(
    const StructuredSystem& system, int horizon,
    std::span<const int> forbidden = {}, int cap = kDefaultOutputCap);

struct CoverageOptimum {
  std::vector<int> outputs;
  int xi = 0;
};

// Maximum of Xi at horizon d over output sets of size <= budget; the first
// maximiser in (cardinality, lexicographic) order is returned. Throws
// std::out_of_range unless 1 <= budget <= p and CapExceededError when p > cap.
CoverageOptimum BruteForceMaxCoverage(const StructuredSystem& system,
                                      int budget, int cap = kDefaultOutputCap);

}  // namespace obsplace::oracle

#endif  // OBSPLACE_ORACLE_H_
