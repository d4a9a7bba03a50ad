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

#include "obsplace/matching.h"

#include <limits>
#include <stdexcept>
#include <set>
#include <utility>

namespace obsplace {

Matching::Matching(int num_left, int num_right)
    : mate_of_left_(num_left, kUnmatched),
      mate_of_right_(num_right, kUnmatched) {}

void Matching::Add(int left, int right) {
  if (mate_of_left_.at(left) != kUnmatched ||
      mate_of_right_.at(right) != kUnmatched) {
    throw std::invalid_argument("matching endpoint already covered");
  }
  mate_of_left_[left] = right;
  mate_of_right_[right] = left;
  ++size_;
}

std::vector<std::pair<int, int>> Matching::Pairs() const {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(size_);
  for (int l = 0; l < num_left(); ++l) {
    if (mate_of_left_[l] != kUnmatched) pairs.emplace_back(l, mate_of_left_[l]);
  }
  return pairs;
}

class HopcroftKarp {
 public:
  HopcroftKarp(const BipartiteGraph& graph, Matching& m)
      : graph_(graph),
        m_(m),
        dist_(graph.num_left()),
        next_(graph.num_left()) {}

  void Run() {
    while (Layer()) {
      std::fill(next_.begin(), next_.end(), 0);
      for (int u = 0; u < graph_.num_left(); ++u) {
        if (m_.mate_of_left_[u] == kUnmatched && Augment(u)) ++m_.size_;
      }
    }
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  // Breadth-first layering from the free left vertices. Returns whether some
  // free right vertex is reachable.
  bool Layer() {
    std::vector<int> queue;
    queue.reserve(graph_.num_left());
    for (int u = 0; u < graph_.num_left(); ++u) {
      if (m_.mate_of_left_[u] == kUnmatched) {
        dist_[u] = 0;
        queue.push_back(u);
      } else {
        dist_[u] = kInf;
      }
    }
    shortest_ = kInf;
    for (size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      if (dist_[u] >= shortest_) continue;
      for (int r : graph_.Neighbors(u)) {
        const int w = m_.mate_of_right_[r];
        if (w == kUnmatched) {
          if (shortest_ == kInf) shortest_ = dist_[u] + 1;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return shortest_ != kInf;
  }

  bool Augment(int u) {
    auto nbrs = graph_.Neighbors(u);
    for (int& i = next_[u]; i < static_cast<int>(nbrs.size()); ++i) {
      const int r = nbrs[i];
      const int w = m_.mate_of_right_[r];
      const bool ok = w == kUnmatched
                          ? dist_[u] + 1 == shortest_
                          : dist_[w] == dist_[u] + 1 && Augment(w);
      if (ok) {
        m_.mate_of_left_[u] = r;
        m_.mate_of_right_[r] = u;
        ++i;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  const BipartiteGraph& graph_;
  Matching& m_;
  std::vector<int> dist_;
  std::vector<int> next_;
  int shortest_ = kInf;
};

Matching MaximumMatching(const BipartiteGraph& graph) {
  return MaximumMatching(graph, Matching(graph.num_left(), graph.num_right()));
}

Matching MaximumMatching(const BipartiteGraph& graph, Matching warm_start) {
  if (!IsValidMatching(graph, warm_start)) {
    throw std::invalid_argument("warm start is not a matching of the graph");
  }
  HopcroftKarp(graph, warm_start).Run();
  return warm_start;
}

bool IsValidMatching(const BipartiteGraph& graph, const Matching& matching) {
  if (matching.num_left() != graph.num_left() ||
      matching.num_right() != graph.num_right()) {
    return false;
  }
  int count = 0;
  for (int l = 0; l < graph.num_left(); ++l) {
    const int r = matching.MateOfLeft(l);
    if (r == kUnmatched) continue;
    if (matching.MateOfRight(r) != l || !graph.HasEdge(l, r)) return false;
    ++count;
  }
  for (int r = 0; r < graph.num_right(); ++r) {
    const int l = matching.MateOfRight(r);
    if (l != kUnmatched && matching.MateOfLeft(l) != r) return false;
  }
  return count == matching.size();
}

bool MatchingSaturates(const Matching& matching, Side side,
                       std::span<const int> vertices) {
  for (int v : vertices) {
    const int mate = side == Side::kLeft ? matching.MateOfLeft(v)
                                         : matching.MateOfRight(v);
    if (mate == kUnmatched) return false;
  }
  return true;
}

// IncrementalMatcher

struct IncrementalMatcher::Workspace {
  std::vector<char> visited;
  std::vector<int> touched;
};

IncrementalMatcher::IncrementalMatcher(int num_left)
    : mate_of_left_(num_left, kUnmatched) {}

int IncrementalMatcher::Append(std::span<const std::span<const int>> block) {
  mate_of_right_.resize(mate_of_right_.size() + block.size(), kUnmatched);
  Workspace ws;
  const int gain = Augment(block, mate_of_left_, mate_of_right_, ws);
  right_adjacency_.insert(right_adjacency_.end(), block.begin(), block.end());
  size_ += gain;
  return gain;
}

int IncrementalMatcher::TrialGain(
    std::span<const std::span<const int>> block) const {
  std::vector<int> mate_of_left = mate_of_left_;
  std::vector<int> mate_of_right = mate_of_right_;
  mate_of_right.resize(mate_of_right.size() + block.size(), kUnmatched);
  Workspace ws;
  return Augment(block, mate_of_left, mate_of_right, ws);
}

int IncrementalMatcher::Augment(std::span<const std::span<const int>> block,
                                std::vector<int>& mate_of_left,
                                std::vector<int>& mate_of_right,
                                Workspace& ws) const {
  const int base = num_right();
  const int free_left = num_left() - size_;
  ws.visited.assign(num_left(), 0);
  ws.touched.clear();

  auto adjacency = [&](int r) -> std::span<const int> {
    return r < base ? right_adjacency_[r] : block[r - base];
  };

  // Kuhn search from right vertex r. Left vertices visited by a failed search
  // stay marked until the next successful augmentation.
  auto search = [&](auto&& self, int r) -> bool {
    const std::span<const int> nbrs = adjacency(r);
    for (int u : nbrs) {
      if (!ws.visited[u] && mate_of_left[u] == kUnmatched) {
        ws.visited[u] = 1;
        ws.touched.push_back(u);
        mate_of_left[u] = r;
        mate_of_right[r] = u;
        return true;
      }
    }
    for (int u : nbrs) {
      if (ws.visited[u]) continue;
      ws.visited[u] = 1;
      ws.touched.push_back(u);
      if (self(self, mate_of_left[u])) {
        mate_of_left[u] = r;
        mate_of_right[r] = u;
        return true;
      }
    }
    return false;
  };

  int gain = 0;
  std::set<std::pair<const int*, size_t>> failed;
  for (int b = 0; b < static_cast<int>(block.size()) && gain < free_left;
       ++b) {
    const std::span<const int> nbrs = block[b];
    if (nbrs.empty() || failed.contains({nbrs.data(), nbrs.size()})) continue;
    if (search(search, base + b)) {
      ++gain;
      for (int u : ws.touched) ws.visited[u] = 0;
      ws.touched.clear();
      failed.clear();
    } else {
      failed.insert({nbrs.data(), nbrs.size()});
    }
  }
  return gain;
}

std::vector<int> IncrementalMatcher::UnmatchedLeft() const {
  std::vector<int> free;
  for (int l = 0; l < num_left(); ++l) {
    if (mate_of_left_[l] == kUnmatched) free.push_back(l);
  }
  return free;
}

Matching IncrementalMatcher::ToMatching() const {
  Matching m(num_left(), num_right());
  for (int l = 0; l < num_left(); ++l) {
    if (mate_of_left_[l] != kUnmatched) m.Add(l, mate_of_left_[l]);
  }
  return m;
}

}  // namespace obsplace
