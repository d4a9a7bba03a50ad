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

#include "obsplace/placement.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "obsplace/graph.h"
#include "obsplace/matching.h"
#include "obsplace/output_sets.h"

namespace obsplace {

namespace {

void CheckHorizon(int horizon, int d) {
  if (horizon < 1 || horizon > d) {
    throw std::out_of_range("horizon " + std::to_string(horizon) +
                            " outside [1, " + std::to_string(d) + "]");
  }
}

void CheckOutputIds(std::span<const int> outputs, int p) {
  std::vector<char> seen(p, 0);
  for (int o : outputs) {
    if (o < 0 || o >= p) {
      throw std::out_of_range("output " + std::to_string(o + 1) +
                              " outside [1, " + std::to_string(p) + "]");
    }
    if (seen[o]) {
      throw std::invalid_argument("output " + std::to_string(o + 1) +
                                  " listed twice");
    }
    seen[o] = 1;
  }
}

bool RestrictedContractionFree(const StructuredSystem& system,
                               std::span<const int> outputs) {
  if (outputs.empty()) {
    // Only state edges remain.
    const SystemDigraph g = BuildDigraph(system);
    return MaximumMatching(BuildStateBipartite(system)).size() ==
           g.num_states();
  }
  return IsContractionFree(BuildDigraph(system.SelectOutputs(outputs)));
}

// Hall deficiency witness: states left unmatched in the out-neighbour graph.
int OutNeighbourMatchingSize(const StructuredSystem& system,
                             std::span<const int> outputs) {
  if (outputs.empty()) {
    return MaximumMatching(BuildStateBipartite(system)).size();
  }
  return MaximumMatching(BuildOutNeighbourBipartite(
                             BuildDigraph(system.SelectOutputs(outputs))))
      .size();
}

// Xi over a growing selection. Each candidate's output sets form one block
// of right vertices appended to a warm-started matcher.
class SelectionState {
 public:
  SelectionState(const SystemDigraph& digraph, int horizon)
      : cache_(digraph, horizon), matcher_(digraph.num_states()) {}

  int Gain(int output) { return matcher_.TrialGain(cache_.Sets(output)); }
  int Commit(int output) { return matcher_.Append(cache_.Sets(output)); }
  int xi() const { return matcher_.size(); }
  std::vector<int> UnmatchedStates() const { return matcher_.UnmatchedLeft(); }

 private:
  OutputSetCache cache_;
  IncrementalMatcher matcher_;
};

struct GreedyPick {
  int output = -1;
  int gain = 0;
};

// Highest gain, lowest id among `candidates` (ascending, unselected).
GreedyPick EagerPick(SelectionState& state, const std::vector<int>& candidates,
                     const std::vector<char>& selected) {
  GreedyPick best;
  for (int c : candidates) {
    if (selected[c]) continue;
    const int g = state.Gain(c);
    if (best.output < 0 || g > best.gain) best = {c, g};
  }
  return best;
}

// Lazy evaluation: stale gains are upper bounds because Xi is submodular.
// An entry refreshed in the current round that sits on top of the heap
// dominates every other (bound, id) pair, which reproduces the eager choice
// including its lowest-id tie-break.
class LazyPicker {
 public:
  LazyPicker(const std::vector<int>& candidates, int initial_bound) {
    for (int c : candidates) heap_.push({initial_bound, c, -1});
  }

  GreedyPick Pick(SelectionState& state, int round) {
    while (!heap_.empty()) {
      Item top = heap_.top();
      heap_.pop();
      if (top.round == round) return {top.output, top.bound};
      heap_.push({state.Gain(top.output), top.output, round});
    }
    return {};
  }

 private:
  struct Item {
    int bound;
    int output;
    int round;
  };
  struct Lower {
    bool operator()(const Item& a, const Item& b) const {
      if (a.bound != b.bound) return a.bound < b.bound;
      return a.output > b.output;
    }
  };
  std::priority_queue<Item, std::vector<Item>, Lower> heap_;
};

bool UseLazy(const GreedyOptions& options, int num_states) {
  switch (options.evaluation) {
    case GainEvaluation::kEager:
      return false;
    case GainEvaluation::kLazy:
      return true;
    case GainEvaluation::kAuto:
      break;
  }
  return num_states >= kLazyGreedyMinStates;
}

// Picks until Xi reaches `target`, `max_picks` outputs are chosen, or no
// candidate adds anything.
void RunGreedy(SelectionState& state, const std::vector<int>& candidates,
               int target, int max_picks, bool lazy, int num_outputs,
               PlacementResult& result) {
  std::vector<char> selected(num_outputs, 0);
  LazyPicker picker(candidates, target + 1);
  for (int round = 0; state.xi() < target &&
                      static_cast<int>(result.selected.size()) < max_picks;
       ++round) {
    const GreedyPick pick = lazy ? picker.Pick(state, round)
                                 : EagerPick(state, candidates, selected);
    if (pick.output < 0 || pick.gain == 0) break;
    const int gain = state.Commit(pick.output);
    if (gain != pick.gain) {
      throw std::logic_error("greedy gain changed between trial and commit");
    }
    selected[pick.output] = 1;
    result.selected.push_back(pick.output);
    result.gains.push_back(gain);
  }
  result.final_xi = state.xi();
}

}  // namespace

bool IndexBoundedBy(const StructuredSystem& system,
                    std::span<const int> outputs, int horizon) {
  const int d = system.num_states();
  CheckHorizon(horizon, d);
  CheckOutputIds(outputs, system.num_outputs());
  if (outputs.empty()) return false;
  const SystemDigraph digraph = BuildDigraph(system);
  return Xi(digraph, outputs, horizon) == d &&
         RestrictedContractionFree(system, outputs);
}

std::optional<int> StructuralObservabilityIndex(
    const StructuredSystem& system, std::span<const int> outputs) {
  const int d = system.num_states();
  CheckOutputIds(outputs, system.num_outputs());
  if (outputs.empty() || d == 0) return std::nullopt;
  const SystemDigraph restricted = BuildDigraph(system.SelectOutputs(outputs));
  if (!IsContractionFree(restricted)) return std::nullopt;

  // B at horizon k + 1 is B at horizon k plus one right vertex per output,
  // so the matching grows step by step.
  OutputSetCache cache(restricted, d);
  IncrementalMatcher matcher(d);
  const int s = static_cast<int>(outputs.size());
  std::vector<std::span<const int>> block(s);
  for (int step = 1; step <= d; ++step) {
    for (int slot = 0; slot < s; ++slot) {
      block[slot] = cache.Sets(slot)[step - 1];
    }
    matcher.Append(block);
    if (matcher.size() == d) return step;
  }
  return std::nullopt;
}

PlacementResult MinSensorGreedy(const StructuredSystem& system, int horizon,
                                std::span<const int> forbidden,
                                const GreedyOptions& options) {
  const int d = system.num_states();
  const int p = system.num_outputs();
  CheckHorizon(horizon, d);
  CheckOutputIds(forbidden, p);

  PlacementResult result;
  result.horizon = horizon;
  result.bound_factor = 1.0 + std::log(static_cast<double>(d));
  result.self_loop_surrogate_holds =
      MaximumMatching(BuildStateBipartite(system)).size() == d;

  std::vector<char> banned(p, 0);
  for (int f : forbidden) banned[f] = 1;
  std::vector<int> admissible;
  for (int o = 0; o < p; ++o) {
    if (!banned[o]) admissible.push_back(o);
  }

  const SystemDigraph digraph = BuildDigraph(system);

  // Up-front feasibility: Xi over every admissible output.
  {
    SelectionState all(digraph, horizon);
    for (int o : admissible) all.Commit(o);
    result.attainable_xi = all.xi();
    if (all.xi() < d) {
      result.unmatched_states = all.UnmatchedStates();
      return result;
    }
  }
  if (!result.self_loop_surrogate_holds &&
      !RestrictedContractionFree(system, admissible)) {
    const Matching hall =
        MaximumMatching(BuildOutNeighbourBipartite(
            BuildDigraph(system.SelectOutputs(admissible))));
    for (int v = 0; v < d; ++v) {
      if (hall.MateOfLeft(v) == kUnmatched) result.unmatched_states.push_back(v);
    }
    return result;
  }

  SelectionState state(digraph, horizon);
  RunGreedy(state, admissible, d, p, UseLazy(options, d), p, result);

  if (!result.self_loop_surrogate_holds) {
    // Xi = d alone does not rule out a contraction here; extend the answer by
    // the output that most reduces the Hall deficiency until none is left.
    std::vector<int> chosen = result.selected;
    int matched = OutNeighbourMatchingSize(system, chosen);
    while (matched < d) {
      int best = -1;
      int best_matched = matched;
      for (int o : admissible) {
        if (std::find(chosen.begin(), chosen.end(), o) != chosen.end()) {
          continue;
        }
        chosen.push_back(o);
        const int m = OutNeighbourMatchingSize(system, chosen);
        chosen.pop_back();
        if (m > best_matched) {
          best = o;
          best_matched = m;
        }
      }
      if (best < 0) break;
      chosen.push_back(best);
      result.selected.push_back(best);
      result.gains.push_back(0);
      matched = best_matched;
    }
  }
  result.feasible = true;
  return result;
}

PlacementResult MaxCoverageGreedy(const StructuredSystem& system, int budget,
                                  const GreedyOptions& options) {
  const int d = system.num_states();
  const int p = system.num_outputs();
  if (budget < 1 || budget > p) {
    throw std::out_of_range("budget " + std::to_string(budget) +
                            " outside [1, " + std::to_string(p) + "]");
  }
  CheckHorizon(d, d);

  PlacementResult result;
  result.horizon = d;
  result.bound_factor = 1.0 - 1.0 / std::numbers::e;
  result.self_loop_surrogate_holds =
      MaximumMatching(BuildStateBipartite(system)).size() == d;

  std::vector<int> all(p);
  for (int o = 0; o < p; ++o) all[o] = o;
  const SystemDigraph digraph = BuildDigraph(system);
  SelectionState state(digraph, d);
  RunGreedy(state, all, d, budget, UseLazy(options, d), p, result);
  result.feasible = true;
  return result;
}

}  // namespace obsplace
