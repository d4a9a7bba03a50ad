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

#ifndef OBSPLACE_PLACEMENT_H_
#define OBSPLACE_PLACEMENT_H_

#include <optional>
#include <span>
#include <vector>

#include "obsplace/sparsity.h"

namespace obsplace {

struct PlacementResult {
  // Output ids in the order the greedy loop picked them.
  std::vector<int> selected;
  // Marginal gain of Xi at each pick.
  std::vector<int> gains;
  // Xi(selected) at the horizon used.
  int final_xi = 0;
  int horizon = 0;
  // A-priori approximation factor: 1 + ln d for minimum placement,
  // 1 - 1/e for budgeted coverage.
  double bound_factor = 0.0;
  bool feasible = false;

  // Infeasible runs: states left unmatched by a maximum matching over every
  // admissible output, ascending.
  std::vector<int> unmatched_states;
  // MinSensorGreedy: Xi over every admissible output, the best any
  // selection can reach.
  int attainable_xi = 0;
  // False when H(A) has no perfect matching. The answer is then also checked
  // and, if needed, extended for contraction-freeness.
  bool self_loop_surrogate_holds = true;
};

enum class GainEvaluation {
  // Lazy above kLazyGreedyMinStates states, eager below.
  kAuto,
  kEager,
  kLazy,
};

inline constexpr int kLazyGreedyMinStates = 100;

struct GreedyOptions {
  GainEvaluation evaluation = GainEvaluation::kAuto;
};

// mu(A, C(S)) <= horizon: B(A + Z(S)) has a matching saturating the states
// and G(A, C(S)) has no contraction. Throws std::out_of_range for a bad
// horizon or output id.
bool IndexBoundedBy(const StructuredSystem& system,
                    std::span<const int> outputs, int horizon);

// Smallest horizon in [1, d] for which IndexBoundedBy holds; nullopt when
// the pair is not structurally observable.
std::optional<int> StructuralObservabilityIndex(const StructuredSystem& system,
                                                std::span<const int> outputs);

// Greedy minimum sensor placement under an index bound. Outputs in
// `forbidden` are never selected. Infeasibility (Xi over the admissible
// outputs below d) is reported in the result, not thrown. Throws
// std::out_of_range for a horizon outside [1, d] or a bad forbidden id.
PlacementResult MinSensorGreedy(const StructuredSystem& system, int horizon,
                                std::span<const int> forbidden = {},
                                const GreedyOptions& options = {});

// Greedy budgeted coverage at horizon d: at most `budget` outputs, stopping
// once every state is matched or no output adds anything. Throws
// std::out_of_range unless 1 <= budget <= p.
PlacementResult MaxCoverageGreedy(const StructuredSystem& system, int budget,
                                  const GreedyOptions& options = {});

}  // namespace obsplace

#endif  // OBSPLACE_PLACEMENT_H_
