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

#include "obsplace/graph.h"

#include <algorithm>
#include <deque>
#include <string>
#include <utility>

#include "obsplace/errors.h"
#include "obsplace/matching.h"

namespace obsplace {

BipartiteGraph::BipartiteGraph(int num_left, int num_right,
                               std::vector<std::pair<int, int>> edges)
    : num_left_(num_left), num_right_(num_right), edges_(std::move(edges)) {
  if (num_left < 0 || num_right < 0) {
    throw ValidationError("bipartite side sizes must be non-negative");
  }
  for (const auto& [l, r] : edges_) {
    if (l < 0 || l >= num_left || r < 0 || r >= num_right) {
      throw ValidationError("bipartite edge (" + std::to_string(l) + ", " +
                            std::to_string(r) + ") out of range");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw ValidationError("duplicate bipartite edge");
  }
  offsets_.assign(num_left + 1, 0);
  for (const auto& e : edges_) ++offsets_[e.first + 1];
  for (int l = 0; l < num_left; ++l) offsets_[l + 1] += offsets_[l];
  right_of_.reserve(edges_.size());
  for (const auto& e : edges_) right_of_.push_back(e.second);
}

bool BipartiteGraph::HasEdge(int left, int right) const {
  auto n = Neighbors(left);
  return std::binary_search(n.begin(), n.end(), right);
}

SystemDigraph BuildDigraph(const StructuredSystem& system) {
  SystemDigraph g;
  const int d = system.num_states();
  const int p = system.num_outputs();
  g.num_states_ = d;
  g.num_outputs_ = p;
  g.successors_.resize(d);
  g.predecessors_.resize(d);
  g.output_sources_.resize(p);
  g.state_outputs_.resize(d);
  // Entries are row-major, so predecessor and source lists come out sorted.
  for (const Entry& e : system.a().entries()) {
    g.state_edges_.emplace_back(e.col, e.row);
    g.predecessors_[e.row].push_back(e.col);
    g.successors_[e.col].push_back(e.row);
  }
  for (const Entry& e : system.c().entries()) {
    g.output_edges_.emplace_back(e.col, e.row);
    g.output_sources_[e.row].push_back(e.col);
    g.state_outputs_[e.col].push_back(e.row);
  }
  std::sort(g.state_edges_.begin(), g.state_edges_.end());
  std::sort(g.output_edges_.begin(), g.output_edges_.end());
  for (auto& s : g.successors_) std::sort(s.begin(), s.end());
  for (auto& s : g.state_outputs_) std::sort(s.begin(), s.end());
  return g;
}

BipartiteGraph BuildStateBipartite(const StructuredSystem& system) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(system.a().nnz());
  for (const Entry& e : system.a().entries()) edges.emplace_back(e.col, e.row);
  const int d = system.num_states();
  return BipartiteGraph(d, d, std::move(edges));
}

BipartiteGraph BuildOutNeighbourBipartite(const SystemDigraph& digraph) {
  const int d = digraph.num_states();
  std::vector<std::pair<int, int>> edges(digraph.state_edges());
  edges.reserve(edges.size() + digraph.output_edges().size());
  for (const auto& [state, output] : digraph.output_edges()) {
    edges.emplace_back(state, d + output);
  }
  return BipartiteGraph(d, d + digraph.num_outputs(), std::move(edges));
}

bool HasAllSelfLoops(const StructuredSystem& system) {
  for (int i = 0; i < system.num_states(); ++i) {
    if (!system.a().Contains(i, i)) return false;
  }
  return true;
}

bool IsContractionFree(const SystemDigraph& digraph) {
  return MaximumMatching(BuildOutNeighbourBipartite(digraph)).size() ==
         digraph.num_states();
}

std::vector<int> StatesWithoutOutputPath(const SystemDigraph& digraph) {
  const int d = digraph.num_states();
  std::vector<char> reaches(d, 0);
  std::deque<int> queue;
  for (int o = 0; o < digraph.num_outputs(); ++o) {
    for (int s : digraph.OutputSources(o)) {
      if (!reaches[s]) {
        reaches[s] = 1;
        queue.push_back(s);
      }
    }
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int u : digraph.Predecessors(v)) {
      if (!reaches[u]) {
        reaches[u] = 1;
        queue.push_back(u);
      }
    }
  }
  std::vector<int> missing;
  for (int v = 0; v < d; ++v) {
    if (!reaches[v]) missing.push_back(v);
  }
  return missing;
}

bool IsStructurallyObservable(const SystemDigraph& digraph) {
  return StatesWithoutOutputPath(digraph).empty() &&
         IsContractionFree(digraph);
}

bool IsStructurallyObservable(const StructuredSystem& system) {
  return IsStructurallyObservable(BuildDigraph(system));
}

}  // namespace obsplace
