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

#ifndef OBSPLACE_OUTPUT_SETS_H_
#define OBSPLACE_OUTPUT_SETS_H_

#include <memory>
#include <span>
#include <vector>

#include "obsplace/graph.h"

namespace obsplace {

// Y_i(k) for a set of outputs i and steps k = 1..horizon: the states with a
// directed walk of length exactly k to output i (vertices may repeat).
class OutputSetFamily {
 public:
  OutputSetFamily(int num_states, std::vector<int> outputs, int horizon,
                  std::vector<std::vector<int>> sets);

  int num_states() const { return num_states_; }
  int horizon() const { return horizon_; }
  const std::vector<int>& outputs() const { return outputs_; }

  // Sorted states of Y_i(k); `slot` indexes outputs(), `step` is 1-based.
  const std::vector<int>& Get(int slot, int step) const {
    return sets_[static_cast<size_t>(slot) * horizon_ + (step - 1)];
  }
  // Same, keyed by output id. Throws std::out_of_range when absent.
  const std::vector<int>& ForOutput(int output, int step) const;

  int size() const { return static_cast<int>(sets_.size()); }

 private:
  int num_states_;
  std::vector<int> outputs_;
  int horizon_;
  std::vector<std::vector<int>> sets_;
};

// Backward iteration: Y_i(1) = sources of output i, Y_i(k) = predecessors of
// Y_i(k-1). Throws std::out_of_range unless 1 <= horizon <= d and every output
// id is valid.
OutputSetFamily ComputeOutputSets(const SystemDigraph& digraph,
                                  std::span<const int> outputs, int horizon);

// B(A + Z(S)): left = states, right = one vertex per (output slot, step) in
// slot-major order, edge iff membership. Empty sets stay as isolated right
// vertices.
BipartiteGraph BuildPlacementBipartite(int num_states,
                                       const OutputSetFamily& family);

// Size of a maximum matching of the placement bipartite graph. Zero for an
// empty output set.
int Xi(const SystemDigraph& digraph, std::span<const int> outputs,
       int horizon);

// Per-output Y_i(1..horizon), computed on first use. Successive sets are
// compared and the sequence is recognised once it turns periodic, so equal
// sets share storage; this keeps horizon = d affordable on large systems.
class OutputSetCache {
 public:
  OutputSetCache(const SystemDigraph& digraph, int horizon);

  int horizon() const { return horizon_; }

  // Y_output(1..horizon) as views into cache-owned storage. Views stay valid
  // for the lifetime of the cache.
  const std::vector<std::span<const int>>& Sets(int output);

  // Same storage identity for two steps means equal sets.
  int DistinctCount(int output);

 private:
  struct Entry {
    bool ready = false;
    std::vector<std::vector<int>> distinct;
    std::vector<std::span<const int>> by_step;
  };

  class PredecessorGrid;

  void Fill(int output);

  const SystemDigraph& digraph_;
  std::shared_ptr<const PredecessorGrid> pred_;
  int horizon_;
  std::vector<Entry> entries_;
};

}  // namespace obsplace

#endif  // OBSPLACE_OUTPUT_SETS_H_
