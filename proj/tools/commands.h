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

#ifndef OBSPLACE_TOOLS_COMMANDS_H_
#define OBSPLACE_TOOLS_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace obsplace::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInfeasible = 1,
  kInputError = 2,
  kCapRefusal = 3,
};

// Key/value report. Rendered as `key: value` lines; the elapsed time is kept
// out of the rendering so that output is byte-stable.
struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> fields;
  double elapsed_ms = 0.0;
  int exit_code = kSuccess;

  void Add(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
  }
  std::string Render() const;
};

RunReport Analyze(const std::string& system_file);
RunReport MinSensors(const std::string& system_file, int horizon,
                     const std::optional<std::string>& forbidden_file);
RunReport MaxObserve(const std::string& system_file, int budget);

enum class CurveMode { kIndexSweep, kBudgetSweep };
// CSV text including the header line.
std::string Curves(const std::string& system_file, CurveMode mode);

enum class OracleCommand { kMinSensors, kMaxCoverage, kNumericIndex,
                           kContraction };
struct OracleOptions {
  int horizon = 0;
  int budget = 0;
  std::optional<std::string> forbidden_file;
  std::uint64_t seed = 0;
  std::optional<int> cap;
};
RunReport Oracle(const std::string& system_file, OracleCommand command,
                 const OracleOptions& options);

RunReport GenGrid(const std::string& topology_file,
                  const std::string& out_system_file, bool identity_outputs);

// Full command-line entry point. Reports go to `out`, diagnostics and timing
// to `err`. Returns the process exit code.
int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err);

}  // namespace obsplace::cli

#endif  // OBSPLACE_TOOLS_COMMANDS_H_
