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

#include "obsplace/grid_model.h"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "obsplace/errors.h"

namespace obsplace {

const char* GridStateName(GridState state) {
  switch (state) {
    case GridState::kTurbinePower:
      return "P_TG";
    case GridState::kGeneratorPower:
      return "P_G";
    case GridState::kGeneratorFrequency:
      return "w_G";
    case GridState::kValveOpening:
      return "a_G";
    case GridState::kLoadPower:
      return "P_L";
    case GridState::kLoadFrequency:
      return "w_L";
    case GridState::kLoadConsumption:
      return "I_L";
  }
  return "?";
}

GridStateMap::GridStateMap(int num_generators, int num_loads)
    : num_generators_(num_generators), num_loads_(num_loads) {}

int GridStateMap::GeneratorState(int generator, GridState slot) const {
  if (generator < 0 || generator >= num_generators_) {
    throw std::out_of_range("generator index out of range");
  }
  int offset = 0;
  switch (slot) {
    case GridState::kTurbinePower:
      offset = 0;
      break;
    case GridState::kGeneratorPower:
      offset = 1;
      break;
    case GridState::kGeneratorFrequency:
      offset = 2;
      break;
    case GridState::kValveOpening:
      offset = 3;
      break;
    default:
      throw std::invalid_argument("not a generator state");
  }
  return kGeneratorStates * generator + offset;
}

int GridStateMap::LoadState(int load, GridState slot) const {
  if (load < 0 || load >= num_loads_) {
    throw std::out_of_range("load index out of range");
  }
  int offset = 0;
  switch (slot) {
    case GridState::kLoadPower:
      offset = 0;
      break;
    case GridState::kLoadFrequency:
      offset = 1;
      break;
    case GridState::kLoadConsumption:
      offset = 2;
      break;
    default:
      throw std::invalid_argument("not a load state");
  }
  return kGeneratorStates * num_generators_ + kLoadStates * load + offset;
}

GridStateMap::Slot GridStateMap::Describe(int state) const {
  static constexpr GridState kGen[] = {
      GridState::kTurbinePower, GridState::kGeneratorPower,
      GridState::kGeneratorFrequency, GridState::kValveOpening};
  static constexpr GridState kLoad[] = {GridState::kLoadPower,
                                        GridState::kLoadFrequency,
                                        GridState::kLoadConsumption};
  if (state < 0 || state >= num_states()) {
    throw std::out_of_range("state index out of range");
  }
  const int gen_states = kGeneratorStates * num_generators_;
  if (state < gen_states) {
    return {true, state / kGeneratorStates, kGen[state % kGeneratorStates]};
  }
  const int rel = state - gen_states;
  return {false, rel / kLoadStates, kLoad[rel % kLoadStates]};
}

void ValidateGridSpec(const GridSpec& spec) {
  std::vector<std::string> problems;
  auto check_unique = [&](const std::vector<std::string>& ids,
                          const char* kind) {
    std::set<std::string> seen;
    for (const auto& id : ids) {
      if (!seen.insert(id).second) {
        problems.push_back(std::string("duplicate ") + kind + " bus " + id);
      }
    }
  };
  check_unique(spec.generators, "generator");
  check_unique(spec.loads, "load");
  if (spec.generators.empty() && spec.loads.empty()) {
    problems.push_back("no generators or loads");
  }
  std::set<std::string> buses(spec.generators.begin(), spec.generators.end());
  buses.insert(spec.loads.begin(), spec.loads.end());
  for (const auto& [a, b] : spec.lines) {
    for (const auto& end : {a, b}) {
      if (!buses.contains(end)) {
        problems.push_back("line " + a + " " + b + " references unknown bus " +
                           end);
      }
    }
    if (a == b) problems.push_back("line " + a + " " + b + " is a self-loop");
  }
  if (!problems.empty()) {
    std::string msg = "invalid grid topology:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw ValidationError(msg);
  }
}

GridModel BuildGridSystem(const GridSpec& spec) {
  ValidateGridSpec(spec);
  const int g = static_cast<int>(spec.generators.size());
  const int l = static_cast<int>(spec.loads.size());
  GridStateMap map(g, l);
  const int d = map.num_states();

  std::set<Entry> entries;
  // State edge from -> to is the entry A(to, from).
  auto edge = [&](int from, int to) { entries.insert({to, from}); };

  // Frequency and power states of every component at each bus.
  std::map<std::string, std::vector<std::pair<int, int>>> at_bus;
  for (int i = 0; i < g; ++i) {
    const int ptg = map.GeneratorState(i, GridState::kTurbinePower);
    const int pg = map.GeneratorState(i, GridState::kGeneratorPower);
    const int wg = map.GeneratorState(i, GridState::kGeneratorFrequency);
    const int ag = map.GeneratorState(i, GridState::kValveOpening);
    for (int s : {ptg, pg, wg, ag}) edge(s, s);
    edge(ag, wg);
    edge(wg, ag);
    edge(wg, pg);
    edge(pg, wg);
    edge(ag, ptg);
    edge(ptg, wg);
    at_bus[spec.generators[i]].emplace_back(wg, pg);
  }
  for (int j = 0; j < l; ++j) {
    const int pl = map.LoadState(j, GridState::kLoadPower);
    const int wl = map.LoadState(j, GridState::kLoadFrequency);
    const int il = map.LoadState(j, GridState::kLoadConsumption);
    for (int s : {pl, wl, il}) edge(s, s);
    edge(pl, wl);
    edge(wl, pl);
    edge(il, wl);
    at_bus[spec.loads[j]].emplace_back(wl, pl);
  }
  for (const auto& [a, b] : spec.lines) {
    for (const auto& [freq_a, power_a] : at_bus[a]) {
      for (const auto& [freq_b, power_b] : at_bus[b]) {
        edge(freq_a, power_b);
        edge(freq_b, power_a);
      }
    }
  }
  return {StructuredSystem(
              SparsityPattern(d, d, {entries.begin(), entries.end()}),
              SparsityPattern::Empty(1, d)),
          map};
}

GridSpec ParseGridTopology(std::istream& in, const std::string& source) {
  GridSpec spec;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens.front().starts_with('#')) continue;
    const std::string& kind = tokens[0];
    if (kind == "gen" && tokens.size() == 2) {
      spec.generators.push_back(tokens[1]);
    } else if (kind == "load" && tokens.size() == 2) {
      spec.loads.push_back(tokens[1]);
    } else if (kind == "line" && tokens.size() == 3) {
      spec.lines.emplace_back(tokens[1], tokens[2]);
    } else {
      throw ParseError(source, line_no,
                       "expected 'gen <bus>', 'load <bus>' or "
                       "'line <bus> <bus>'");
    }
  }
  ValidateGridSpec(spec);
  return spec;
}

GridSpec ReadGridTopologyFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return ParseGridTopology(in, path);
}

}  // namespace obsplace
