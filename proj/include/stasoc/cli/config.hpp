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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stasoc/scales.hpp"

namespace stasoc::cli {

enum class Mode { Design, Simulate, Compare, Sweep };
enum class ProtocolKind { Sta, Adiabatic };

/// One experiment. Populated from a flat `key = value` file; see README for
/// the key list. Numbers accept `pi` factors such as `100*pi` or `pi/2`.
struct RunConfig {
  std::optional<Mode> mode;
  ProtocolKind protocol = ProtocolKind::Sta;
  double distance = 10.0;
  double duration = 8.0;
  double soc_strength = 1.0;
  PhysicalScales scales;

  double x_min = -15.0;
  double x_max = 25.0;
  std::size_t grid_points = 2048;
  double dt = 1e-3;

  double coupling = 0.0;
  std::size_t sample_every = 10;
  bool midpoint_controls = true;

  std::filesystem::path out_dir = ".";
  std::vector<double> sweep_couplings;
  /// Extra density snapshot times as fractions of t_f.
  std::vector<double> snapshot_fractions;

  bool sequential = false;
  /// Worker count for sweeps; 0 means hardware concurrency.
  std::size_t threads = 0;

  void validate() const;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::filesystem::path& path);

/// Number with optional pi factors: "8", "1e-3", "100*pi", "-pi/2".
double parse_number(std::string_view text);

std::string to_string(Mode mode);
std::string to_string(ProtocolKind kind);

}  // namespace stasoc::cli
