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

#ifndef OBSPLACE_GRID_MODEL_H_
#define OBSPLACE_GRID_MODEL_H_

#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "obsplace/sparsity.h"

namespace obsplace {

// Bus/branch description of a power grid. Bus identifiers are opaque tokens.
struct GridSpec {
  std::vector<std::string> generators;
  std::vector<std::string> loads;
  std::vector<std::pair<std::string, std::string>> lines;
};

enum class GridState {
  kTurbinePower,      // P_TG
  kGeneratorPower,    // P_G
  kGeneratorFrequency,  // w_G
  kValveOpening,      // a_G
  kLoadPower,         // P_L
  kLoadFrequency,     // w_L
  kLoadConsumption,   // I_L
};

const char* GridStateName(GridState state);

inline constexpr int kGeneratorStates = 4;
inline constexpr int kLoadStates = 3;

// State layout: generators first in spec order with slots
// (P_TG, P_G, w_G, a_G), then loads with slots (P_L, w_L, I_L).
class GridStateMap {
 public:
  GridStateMap(int num_generators, int num_loads);

  int num_generators() const { return num_generators_; }
  int num_loads() const { return num_loads_; }
  int num_states() const {
    return kGeneratorStates * num_generators_ + kLoadStates * num_loads_;
  }

  int GeneratorState(int generator, GridState slot) const;
  int LoadState(int load, GridState slot) const;

  struct Slot {
    bool is_generator = false;
    int component = 0;  // index into generators or loads
    GridState state = GridState::kTurbinePower;
  };
  // Inverse of the two lookups above.
  Slot Describe(int state) const;

 private:
  int num_generators_;
  int num_loads_;
};

struct GridModel {
  StructuredSystem system;
  GridStateMap state_map;
};

// Throws ValidationError listing every offending identifier.
void ValidateGridSpec(const GridSpec& spec);

// Generator template: self-loops, a_G <-> w_G, w_G <-> P_G, a_G -> P_TG,
// P_TG -> w_G. Load template: self-loops, P_L <-> w_L, I_L -> w_L. Each line
// adds, for every component pair across it, frequency -> power in both
// directions. The output pattern is a single empty row: selecting outputs is
// left to the caller.
GridModel BuildGridSystem(const GridSpec& spec);

// Lines `gen <bus>`, `load <bus>`, `line <bus> <bus>`; `#` comments.
GridSpec ParseGridTopology(std::istream& in, const std::string& source);
GridSpec ReadGridTopologyFile(const std::string& path);

}  // namespace obsplace

#endif  // OBSPLACE_GRID_MODEL_H_
