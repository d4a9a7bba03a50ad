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

#ifndef OBSPLACE_MATCHING_H_
#define OBSPLACE_MATCHING_H_

#include <span>
#include <utility>
#include <vector>

#include "obsplace/graph.h"

namespace obsplace {

inline constexpr int kUnmatched = -1;

// A set of vertex-disjoint (left, right) pairs over fixed vertex counts.
class Matching {
 public:
  Matching() = default;
  Matching(int num_left, int num_right);

  int num_left() const { return static_cast<int>(mate_of_left_.size()); }
  int num_right() const { return static_cast<int>(mate_of_right_.size()); }
  int size() const { return size_; }

  int MateOfLeft(int left) const { return mate_of_left_[left]; }
  int MateOfRight(int right) const { return mate_of_right_[right]; }

  // Both endpoints must currently be free.
  void Add(int left, int right);

  // Pairs sorted by left vertex.
  std::vector<std::pair<int, int>> Pairs() const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  friend class HopcroftKarp;

  std::vector<int> mate_of_left_;
  std::vector<int> mate_of_right_;
  int size_ = 0;
};

// Maximum-cardinality matching by Hopcroft-Karp phases, O(sqrt(V) E).
// Free left vertices and neighbour lists are scanned in ascending order, so
// the result is a deterministic function of the graph (and warm start).
Matching MaximumMatching(const BipartiteGraph& graph);

// Same, continuing from `warm_start`, which must be a valid matching of
// `graph` (every pair an edge). Throws std::invalid_argument otherwise.
Matching MaximumMatching(const BipartiteGraph& graph, Matching warm_start);

// True iff `matching` is a matching of `graph`: sizes agree, pairs are edges
// and no vertex is used twice.
bool IsValidMatching(const BipartiteGraph& graph, const Matching& matching);

enum class Side { kLeft, kRight };

// Every vertex in `vertices` (on `side`) is covered by `matching`.
bool MatchingSaturates(const Matching& matching, Side side,
                       std::span<const int> vertices);

// Maintains a maximum matching of a bipartite graph whose left side is fixed
// and whose right side only grows. Each appended right vertex is given by its
// ascending list of left neighbours. Since the held matching is maximum
// before a block is appended, any augmenting path afterwards starts at a new
// right vertex, so one search per new vertex restores maximality.
//
// Neighbour lists are held by reference: their storage must outlive the
// matcher.
class IncrementalMatcher {
 public:
  explicit IncrementalMatcher(int num_left);

  int num_left() const { return static_cast<int>(mate_of_left_.size()); }
  int num_right() const { return static_cast<int>(right_adjacency_.size()); }
  int size() const { return size_; }

  // Appends the block and returns the increase in matching size.
  int Append(std::span<const std::span<const int>> block);

  // Increase that Append(block) would produce; leaves the state unchanged.
  int TrialGain(std::span<const std::span<const int>> block) const;

  std::vector<int> UnmatchedLeft() const;
  Matching ToMatching() const;

 private:
  struct Workspace;
  int Augment(std::span<const std::span<const int>> block,
              std::vector<int>& mate_of_left, std::vector<int>& mate_of_right,
              Workspace& ws) const;

  std::vector<std::span<const int>> right_adjacency_;
  std::vector<int> mate_of_left_;
  std::vector<int> mate_of_right_;
  int size_ = 0;
};

}  // namespace obsplace

#endif  // OBSPLACE_MATCHING_H_
