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
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "obsplace/matching.h"

namespace obsplace {

namespace {

// Fixed-width membership grid over the states.
class StateBitset {
 public:
  explicit StateBitset(int n) : words_((n + 63) / 64, 0) {}

  void Set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool Test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void Or(const StateBitset& other) {
    for (size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  }

  std::vector<int> Members() const {
    std::vector<int> out;
    for (size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
        out.push_back(static_cast<int>(w * 64) + std::countr_zero(bits));
      }
    }
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::vector<std::uint64_t> words_;
};

// Row i holds the predecessors of state i.
std::vector<StateBitset> PredecessorRows(const SystemDigraph& digraph) {
  const int d = digraph.num_states();
  std::vector<StateBitset> rows(d, StateBitset(d));
  for (int i = 0; i < d; ++i) {
    for (int j : digraph.Predecessors(i)) rows[i].Set(j);
  }
  return rows;
}

StateBitset Step(const std::vector<StateBitset>& pred,
                 const StateBitset& current, int d) {
  StateBitset next(d);
  for (int r : current.Members()) next.Or(pred[r]);
  return next;
}

void CheckHorizon(int horizon, int d) {
  if (horizon < 1 || horizon > d) {
    throw std::out_of_range("horizon " + std::to_string(horizon) +
                            " outside [1, " + std::to_string(d) + "]");
  }
}

void CheckOutput(int output, int p) {
  if (output < 0 || output >= p) {
    throw std::out_of_range("output " + std::to_string(output + 1) +
                            " outside [1, " + std::to_string(p) + "]");
  }
}

}  // namespace

OutputSetFamily::OutputSetFamily(int num_states, std::vector<int> outputs,
                                 int horizon,
                                 std::vector<std::vector<int>> sets)
    : num_states_(num_states),
      outputs_(std::move(outputs)),
      horizon_(horizon),
      sets_(std::move(sets)) {
  if (sets_.size() != outputs_.size() * static_cast<size_t>(horizon_)) {
    throw std::invalid_argument("output-set family has the wrong shape");
  }
}

const std::vector<int>& OutputSetFamily::ForOutput(int output,
                                                   int step) const {
  auto it = std::find(outputs_.begin(), outputs_.end(), output);
  if (it == outputs_.end() || step < 1 || step > horizon_) {
    throw std::out_of_range("no output set for output " +
                            std::to_string(output + 1) + " at step " +
                            std::to_string(step));
  }
  return Get(static_cast<int>(it - outputs_.begin()), step);
}

OutputSetFamily ComputeOutputSets(const SystemDigraph& digraph,
                                  std::span<const int> outputs, int horizon) {
  const int d = digraph.num_states();
  CheckHorizon(horizon, d);
  for (int o : outputs) CheckOutput(o, digraph.num_outputs());
  const auto pred = PredecessorRows(digraph);
  std::vector<std::vector<int>> sets;
  sets.reserve(outputs.size() * horizon);
  for (int o : outputs) {
    StateBitset current(d);
    for (int s : digraph.OutputSources(o)) current.Set(s);
    sets.push_back(current.Members());
    for (int k = 2; k <= horizon; ++k) {
      current = Step(pred, current, d);
      sets.push_back(current.Members());
    }
  }
  return OutputSetFamily(d, std::vector<int>(outputs.begin(), outputs.end()),
                         horizon, std::move(sets));
}

BipartiteGraph BuildPlacementBipartite(int num_states,
                                       const OutputSetFamily& family) {
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < family.size(); ++r) {
    const int slot = r / family.horizon();
    const int step = r % family.horizon() + 1;
    for (int v : family.Get(slot, step)) edges.emplace_back(v, r);
  }
  return BipartiteGraph(num_states, family.size(), std::move(edges));
}

int Xi(const SystemDigraph& digraph, std::span<const int> outputs,
       int horizon) {
  CheckHorizon(horizon, digraph.num_states());
  if (outputs.empty()) return 0;
  const OutputSetFamily family = ComputeOutputSets(digraph, outputs, horizon);
  return MaximumMatching(BuildPlacementBipartite(digraph.num_states(), family))
      .size();
}

class OutputSetCache::PredecessorGrid {
 public:
  explicit PredecessorGrid(const SystemDigraph& digraph)
      : rows(PredecessorRows(digraph)) {}
  std::vector<StateBitset> rows;
};

OutputSetCache::OutputSetCache(const SystemDigraph& digraph, int horizon)
    : digraph_(digraph),
      pred_(std::make_shared<const PredecessorGrid>(digraph)),
      horizon_(horizon),
      entries_(digraph.num_outputs()) {
  CheckHorizon(horizon, digraph.num_states());
}

const std::vector<std::span<const int>>& OutputSetCache::Sets(int output) {
  CheckOutput(output, digraph_.num_outputs());
  if (!entries_[output].ready) Fill(output);
  return entries_[output].by_step;
}

int OutputSetCache::DistinctCount(int output) {
  Sets(output);
  return static_cast<int>(entries_[output].distinct.size());
}

void OutputSetCache::Fill(int output) {
  const int d = digraph_.num_states();
  Entry& entry = entries_[output];

  // The sequence Y(1), Y(2), ... is determined by its last element, so the
  // first repeat fixes the rest of the sequence periodically.
  std::map<std::vector<std::uint64_t>, int> first_seen;
  std::vector<int> ids;
  StateBitset current(d);
  for (int s : digraph_.OutputSources(output)) current.Set(s);
  int period_start = -1;
  for (int k = 0; k < horizon_; ++k) {
    if (k > 0) current = Step(pred_->rows, current, d);
    auto [it, inserted] = first_seen.emplace(
        current.words(), static_cast<int>(entry.distinct.size()));
    if (!inserted) {
      period_start = it->second;
      break;
    }
    ids.push_back(it->second);
    entry.distinct.push_back(current.Members());
  }
  if (period_start >= 0) {
    const int prefix = static_cast<int>(ids.size());
    const int period = prefix - period_start;
    for (int k = prefix; k < horizon_; ++k) {
      ids.push_back(period_start + (k - period_start) % period);
    }
  }
  entry.by_step.reserve(horizon_);
  for (int id : ids) entry.by_step.emplace_back(entry.distinct[id]);
  entry.ready = true;
}

}  // namespace obsplace
