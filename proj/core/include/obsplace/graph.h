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

#ifndef OBSPLACE_GRAPH_H_
#define OBSPLACE_GRAPH_H_

#include <span>
#include <utility>
#include <vector>

#include "obsplace/sparsity.h"

namespace obsplace {

// G(A, C). State vertices are 0..d-1, output vertices 0..p-1. A_ij != 0
// gives the state edge v_j -> v_i; C_ij != 0 gives the output edge v_j -> i.
class SystemDigraph {
 public:
  int num_states() const { return num_states_; }
  int num_outputs() const { return num_outputs_; }

  // (from, to) pairs, sorted.
  const std::vector<std::pair<int, int>>& state_edges() const {
    return state_edges_;
  }
  // (state, output) pairs, sorted.
  const std::vector<std::pair<int, int>>& output_edges() const {
    return output_edges_;
  }

  std::span<const int> Successors(int state) const {
    return successors_[state];
  }
  std::span<const int> Predecessors(int state) const {
    return predecessors_[state];
  }
  // States with an edge into `output`, ascending.
  std::span<const int> OutputSources(int output) const {
    return output_sources_[output];
  }
  // Outputs that `state` feeds, ascending.
  std::span<const int> StateOutputs(int state) const {
    return state_outputs_[state];
  }

 private:
  friend SystemDigraph BuildDigraph(const StructuredSystem& system);

  int num_states_ = 0;
  int num_outputs_ = 0;
  std::vector<std::pair<int, int>> state_edges_;
  std::vector<std::pair<int, int>> output_edges_;
  std::vector<std::vector<int>> successors_;
  std::vector<std::vector<int>> predecessors_;
  std::vector<std::vector<int>> output_sources_;
  std::vector<std::vector<int>> state_outputs_;
};

// Undirected bipartite graph stored as left-side adjacency (CSR). Neighbour
// lists are ascending. The constructor rejects duplicate and out-of-range
// edges with ValidationError.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int num_left, int num_right,
                 std::vector<std::pair<int, int>> edges);

  int num_left() const { return num_left_; }
  int num_right() const { return num_right_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  // (left, right) pairs, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  std::span<const int> Neighbors(int left) const {
    return {right_of_.data() + offsets_[left],
            right_of_.data() + offsets_[left + 1]};
  }

  bool HasEdge(int left, int right) const;

 private:
  int num_left_ = 0;
  int num_right_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> offsets_{0};
  std::vector<int> right_of_;
};

SystemDigraph BuildDigraph(const StructuredSystem& system);

// H(A): left v_j^1, right v_i^2, edge (j, i) iff A_ij != 0.
BipartiteGraph BuildStateBipartite(const StructuredSystem& system);

// Left = states, right = states followed by outputs (state i is right vertex
// i, output i is right vertex d + i); edge (j, w) iff w is an out-neighbour
// of v_j in E_A + E_C.
BipartiteGraph BuildOutNeighbourBipartite(const SystemDigraph& digraph);

bool HasAllSelfLoops(const StructuredSystem& system);

// No state subset S has |N+(S)| < |S|. Decided through Hall's theorem on
// BuildOutNeighbourBipartite.
bool IsContractionFree(const SystemDigraph& digraph);

// States with no directed path to any output, ascending.
std::vector<int> StatesWithoutOutputPath(const SystemDigraph& digraph);

// Every state reaches an output and the digraph has no contraction.
bool IsStructurallyObservable(const StructuredSystem& system);
bool IsStructurallyObservable(const SystemDigraph& digraph);

}  // namespace obsplace

#endif  // OBSPLACE_GRAPH_H_
