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

#include "commands.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "obsplace/errors.h"
#include "obsplace/graph.h"
#include "obsplace/grid_model.h"
#include "obsplace/oracle.h"
#include "obsplace/placement.h"
#include "obsplace/sparsity.h"
#include "obsplace/system_io.h"

namespace obsplace::cli {

namespace {

// Consecutive equal rows after which the index sweep stops.
constexpr int kPlateauRows = 10;

std::string Bool(bool b) { return b ? "true" : "false"; }

std::string Fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

// 1-based, space separated; "-" for an empty list.
std::string OneBased(const std::vector<int>& ids) {
  if (ids.empty()) return "-";
  std::string s;
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(ids[i] + 1);
  }
  return s;
}

std::string Plain(const std::vector<int>& values) {
  if (values.empty()) return "-";
  std::string s;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(values[i]);
  }
  return s;
}

std::vector<int> AllOutputs(const StructuredSystem& system) {
  std::vector<int> all(system.num_outputs());
  for (int o = 0; o < system.num_outputs(); ++o) all[o] = o;
  return all;
}

void AddDigest(RunReport& report, const StructuredSystem& system) {
  report.Add("states", std::to_string(system.num_states()));
  report.Add("outputs", std::to_string(system.num_outputs()));
  report.Add("state_edges", std::to_string(system.a().nnz()));
  report.Add("output_edges", std::to_string(system.c().nnz()));
}

void AddPlacement(RunReport& report, const PlacementResult& r, int d) {
  report.Add("feasible", Bool(r.feasible));
  report.Add("selected", OneBased(r.selected));
  report.Add("count", std::to_string(r.selected.size()));
  report.Add("gains", Plain(r.gains));
  report.Add("xi", std::to_string(r.final_xi) + "/" + std::to_string(d));
  report.Add("bound_factor", Fixed(r.bound_factor));
  report.Add("self_loop_surrogate", Bool(r.self_loop_surrogate_holds));
}

class Stopwatch {
 public:
  double ElapsedMs() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

}  // namespace

std::string RunReport::Render() const {
  std::string s = "command: " + command + "\n";
  for (const auto& [k, v] : fields) s += k + ": " + v + "\n";
  return s;
}

RunReport Analyze(const std::string& system_file) {
  Stopwatch clock;
  RunReport report;
  report.command = "analyze " + system_file;
  const StructuredSystem system = ReadSystemFile(system_file);
  AddDigest(report, system);
  const SystemDigraph digraph = BuildDigraph(system);
  report.Add("self_loops", Bool(HasAllSelfLoops(system)));
  report.Add("contraction_free", Bool(IsContractionFree(digraph)));
  report.Add("unreached_states", OneBased(StatesWithoutOutputPath(digraph)));
  report.Add("observable", Bool(IsStructurallyObservable(digraph)));
  const auto index = StructuralObservabilityIndex(system, AllOutputs(system));
  report.Add("index", index ? std::to_string(*index) : "unobservable");
  report.elapsed_ms = clock.ElapsedMs();
  return report;
}

RunReport MinSensors(const std::string& system_file, int horizon,
                     const std::optional<std::string>& forbidden_file) {
  Stopwatch clock;
  RunReport report;
  report.command = "min-sensors " + system_file + " --horizon " +
                   std::to_string(horizon);
  if (forbidden_file) report.command += " --forbidden " + *forbidden_file;
  const StructuredSystem system = ReadSystemFile(system_file);
  std::vector<int> forbidden;
  if (forbidden_file) {
    forbidden = ReadOutputListFile(*forbidden_file, system.num_outputs());
  }
  AddDigest(report, system);
  report.Add("horizon", std::to_string(horizon));
  report.Add("forbidden", OneBased(forbidden));
  const PlacementResult r = MinSensorGreedy(system, horizon, forbidden);
  AddPlacement(report, r, system.num_states());
  if (!r.feasible) {
    report.Add("attainable_xi", std::to_string(r.attainable_xi) + "/" +
                                    std::to_string(system.num_states()));
    report.Add("unmatched_states", OneBased(r.unmatched_states));
    report.exit_code = kInfeasible;
  }
  report.elapsed_ms = clock.ElapsedMs();
  return report;
}

RunReport MaxObserve(const std::string& system_file, int budget) {
  Stopwatch clock;
  RunReport report;
  report.command =
      "max-observe " + system_file + " --budget " + std::to_string(budget);
  const StructuredSystem system = ReadSystemFile(system_file);
  AddDigest(report, system);
  report.Add("budget", std::to_string(budget));
  const PlacementResult r = MaxCoverageGreedy(system, budget);
  report.Add("selected", OneBased(r.selected));
  report.Add("count", std::to_string(r.selected.size()));
  report.Add("gains", Plain(r.gains));
  report.Add("observable_states", std::to_string(r.final_xi) + "/" +
                                      std::to_string(system.num_states()));
  report.Add("bound_factor", Fixed(r.bound_factor));
  report.elapsed_ms = clock.ElapsedMs();
  return report;
}

std::string Curves(const std::string& system_file, CurveMode mode) {
  const StructuredSystem system = ReadSystemFile(system_file);
  const int d = system.num_states();
  std::ostringstream csv;
  if (mode == CurveMode::kIndexSweep) {
    csv << "l,outputs\n";
    int last = -1;
    int run = 0;
    for (int l = 1; l <= d && run < kPlateauRows; ++l) {
      const PlacementResult r = MinSensorGreedy(system, l);
      if (!r.feasible) continue;
      // A placement meeting a smaller bound meets this one too; greedy alone
      // is not monotone in l.
      int count = static_cast<int>(r.selected.size());
      if (last >= 0) count = std::min(count, last);
      csv << l << ',' << count << '\n';
      run = count == last ? run + 1 : 1;
      last = count;
    }
  } else {
    csv << "r,states\n";
    // Greedy picks do not depend on the budget, which only truncates the
    // pick sequence, so one full run yields every row.
    const PlacementResult r = MaxCoverageGreedy(system, system.num_outputs());
    int xi = 0;
    for (int budget = 1; budget <= system.num_outputs(); ++budget) {
      if (budget <= static_cast<int>(r.gains.size())) xi += r.gains[budget - 1];
      csv << budget << ',' << xi << '\n';
      if (xi == d) break;
    }
  }
  return csv.str();
}

RunReport Oracle(const std::string& system_file, OracleCommand command,
                 const OracleOptions& options) {
  Stopwatch clock;
  RunReport report;
  const StructuredSystem system = ReadSystemFile(system_file);
  const int d = system.num_states();
  switch (command) {
    case OracleCommand::kMinSensors: {
      report.command = "oracle min-sensors " + system_file + " --horizon " +
                       std::to_string(options.horizon);
      std::vector<int> forbidden;
      if (options.forbidden_file) {
        report.command += " --forbidden " + *options.forbidden_file;
        forbidden =
            ReadOutputListFile(*options.forbidden_file, system.num_outputs());
      }
      AddDigest(report, system);
      const auto best = oracle::BruteForceMinSensors(
          system, options.horizon, forbidden,
          options.cap.value_or(oracle::kDefaultOutputCap));
      report.Add("feasible", Bool(best.has_value()));
      report.Add("optimum", best ? OneBased(*best) : "-");
      report.Add("count", best ? std::to_string(best->size()) : "-");
      if (!best) report.exit_code = kInfeasible;
      break;
    }
    case OracleCommand::kMaxCoverage: {
      report.command = "oracle max-coverage " + system_file + " --budget " +
                       std::to_string(options.budget);
      AddDigest(report, system);
      const auto best = oracle::BruteForceMaxCoverage(
          system, options.budget,
          options.cap.value_or(oracle::kDefaultOutputCap));
      report.Add("optimum", OneBased(best.outputs));
      report.Add("observable_states",
                 std::to_string(best.xi) + "/" + std::to_string(d));
      break;
    }
    case OracleCommand::kNumericIndex: {
      report.command = "oracle numeric-index " + system_file + " --seed " +
                       std::to_string(options.seed);
      AddDigest(report, system);
      const auto realization = oracle::RandomRealization(system, options.seed);
      const auto index = oracle::NumericObservabilityIndex(realization);
      report.Add("modulus", std::to_string(realization.modulus));
      report.Add("index", index ? std::to_string(*index) : "unobservable");
      break;
    }
    case OracleCommand::kContraction: {
      report.command = "oracle contraction " + system_file;
      AddDigest(report, system);
      report.Add("contraction_free",
                 Bool(oracle::ExhaustiveContractionCheck(
                     BuildDigraph(system),
                     options.cap.value_or(oracle::kDefaultStateCap))));
      break;
    }
  }
  report.elapsed_ms = clock.ElapsedMs();
  return report;
}

RunReport GenGrid(const std::string& topology_file,
                  const std::string& out_system_file, bool identity_outputs) {
  Stopwatch clock;
  RunReport report;
  report.command = "gen-grid " + topology_file + " " + out_system_file;
  if (identity_outputs) report.command += " --identity-outputs";
  const GridSpec spec = ReadGridTopologyFile(topology_file);
  GridModel model = BuildGridSystem(spec);
  StructuredSystem system =
      identity_outputs
          ? StructuredSystem(model.system.a(),
                             SparsityPattern::Identity(
                                 model.system.num_states()))
          : model.system;
  {
    std::ofstream out(out_system_file);
    if (!out) throw ParseError(out_system_file, 0, "cannot write file");
    out << "# Generated from " << topology_file << ": "
        << spec.generators.size() << " generators, " << spec.loads.size()
        << " loads, " << spec.lines.size() << " lines.\n";
    WriteSystem(out, system);
    if (!out) throw ParseError(out_system_file, 0, "write failed");
  }
  report.Add("generators", std::to_string(spec.generators.size()));
  report.Add("loads", std::to_string(spec.loads.size()));
  report.Add("lines", std::to_string(spec.lines.size()));
  AddDigest(report, system);
  report.Add("self_loops", Bool(HasAllSelfLoops(system)));
  report.Add("written", out_system_file);
  report.elapsed_ms = clock.ElapsedMs();
  return report;
}

int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Structural-observability sensor placement", "obsplace"};
  app.require_subcommand(1);

  std::string system_file;
  std::string topology_file;
  std::string out_file;
  int horizon = 0;
  int budget = 0;
  std::string forbidden_file;
  std::uint64_t seed = oracle::kDefaultSeed;
  int cap = 0;
  bool identity_outputs = false;
  std::string mode;

  auto* analyze = app.add_subcommand("analyze", "Report structural properties");
  analyze->add_option("system", system_file, "System file")->required();

  auto* min_sensors =
      app.add_subcommand("min-sensors", "Greedy minimum sensor placement");
  min_sensors->add_option("system", system_file, "System file")->required();
  min_sensors->add_option("--horizon", horizon, "Index bound l")->required();
  min_sensors->add_option("--forbidden", forbidden_file,
                          "File of forbidden outputs");

  auto* max_observe =
      app.add_subcommand("max-observe", "Greedy budgeted coverage");
  max_observe->add_option("system", system_file, "System file")->required();
  max_observe->add_option("--budget", budget, "Output budget r")->required();

  auto* curves = app.add_subcommand("curves", "Emit CSV sweep curves");
  curves->add_option("system", system_file, "System file")->required();
  curves->add_option("--mode", mode, "index-sweep or budget-sweep")
      ->required()
      ->check(CLI::IsMember({"index-sweep", "budget-sweep"}));

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive reference runs");
  oracle_cmd->require_subcommand(1);
  auto add_oracle = [&](const char* name, const char* help) {
    auto* sub = oracle_cmd->add_subcommand(name, help);
    sub->add_option("system", system_file, "System file")->required();
    sub->add_option("--cap", cap, "Enumeration size cap");
    return sub;
  };
  auto* o_min = add_oracle("min-sensors", "Exact minimum placement");
  o_min->add_option("--horizon", horizon, "Index bound l")->required();
  o_min->add_option("--forbidden", forbidden_file, "File of forbidden outputs");
  auto* o_cov = add_oracle("max-coverage", "Exact budgeted coverage");
  o_cov->add_option("--budget", budget, "Output budget r")->required();
  auto* o_num = add_oracle("numeric-index", "Observability index of a random "
                                            "realization over a prime field");
  o_num->add_option("--seed", seed, "Realization seed");
  auto* o_con = add_oracle("contraction", "Exhaustive contraction check");

  auto* gen_grid = app.add_subcommand("gen-grid", "Build a grid system file");
  gen_grid->add_option("topology", topology_file, "Grid topology file")
      ->required();
  gen_grid->add_option("output", out_file, "System file to write")->required();
  gen_grid->add_flag("--identity-outputs", identity_outputs,
                     "Measure every state with its own output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out;
    std::ostringstream help_err;
    const int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (*curves) {
      out << Curves(system_file, mode == "index-sweep"
                                     ? CurveMode::kIndexSweep
                                     : CurveMode::kBudgetSweep);
      return kSuccess;
    }
    RunReport report;
    if (*analyze) {
      report = Analyze(system_file);
    } else if (*min_sensors) {
      report = MinSensors(system_file, horizon,
                          forbidden_file.empty()
                              ? std::nullopt
                              : std::optional<std::string>(forbidden_file));
    } else if (*max_observe) {
      report = MaxObserve(system_file, budget);
    } else if (*gen_grid) {
      report = GenGrid(topology_file, out_file, identity_outputs);
    } else {
      OracleOptions options;
      options.horizon = horizon;
      options.budget = budget;
      options.seed = seed;
      if (!forbidden_file.empty()) options.forbidden_file = forbidden_file;
      if (cap > 0) options.cap = cap;
      OracleCommand which = OracleCommand::kContraction;
      if (*o_min) which = OracleCommand::kMinSensors;
      if (*o_cov) which = OracleCommand::kMaxCoverage;
      if (*o_num) which = OracleCommand::kNumericIndex;
      if (*o_con) which = OracleCommand::kContraction;
      report = Oracle(system_file, which, options);
    }
    out << report.Render();
    err << "elapsed_ms: " << Fixed(report.elapsed_ms) << "\n";
    return report.exit_code;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << "\n";
    return kCapRefusal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace obsplace::cli
