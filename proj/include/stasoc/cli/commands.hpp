// Copyright 2026 The stasoc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "stasoc/cli/config.hpp"

namespace stasoc::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitFailed = 2,
  kExitWarnings = 3,
};

struct CommandResult {
  int exit_code = kExitOk;
  nlohmann::json summary;
};

/// controls.csv and summary.json for the configured protocol.
CommandResult cmd_design(const RunConfig& cfg, std::ostream& log);
/// observables.csv, density_t<fraction>.csv snapshots and summary.json.
CommandResult cmd_simulate(const RunConfig& cfg, std::ostream& log);
/// compare.csv (numeric vs exact state) at dt, plus a dt/2 run for the order.
CommandResult cmd_compare(const RunConfig& cfg, std::ostream& log);
/// sweep.csv with one fidelity row per gN, in input order.
CommandResult cmd_sweep(const RunConfig& cfg, std::ostream& log);

CommandResult run_mode(Mode mode, const RunConfig& cfg, std::ostream& log);

/// Full command line entry point: `<mode> --config <file> [--out <dir>]
/// [--sequential] [--dt <v>] [--grid-points <n>]`. STASOC_OUT_DIR overrides
/// the config's output directory; --out overrides both.
int main_entry(int argc, char** argv);

}  // namespace stasoc::cli
