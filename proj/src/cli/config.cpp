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

#include "stasoc/cli/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "stasoc/grid.hpp"

namespace stasoc::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_factor(std::string_view token) {
  token = trim(token);
  if (token == "pi") return kPi;
  const std::string s(token);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw ConfigError("not a number: '" + s + "'");
  }
  return v;
}

std::size_t parse_count(std::string_view text) {
  const double v = parse_number(text);
  if (v < 0.0 || v != static_cast<double>(static_cast<std::size_t>(v))) {
    throw ConfigError("expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return static_cast<std::size_t>(v);
}

bool parse_bool(std::string_view text) {
  const auto t = trim(text);
  if (t == "true" || t == "yes" || t == "1") return true;
  if (t == "false" || t == "no" || t == "0") return false;
  throw ConfigError("expected a boolean, got '" + std::string(t) + "'");
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto item = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    if (!item.empty()) values.push_back(parse_number(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

Mode parse_mode(std::string_view text) {
  const auto t = trim(text);
  if (t == "design") return Mode::Design;
  if (t == "simulate") return Mode::Simulate;
  if (t == "compare") return Mode::Compare;
  if (t == "sweep") return Mode::Sweep;
  throw ConfigError("unknown mode '" + std::string(t) + "'");
}

ProtocolKind parse_protocol(std::string_view text) {
  const auto t = trim(text);
  if (t == "sta") return ProtocolKind::Sta;
  if (t == "adiabatic") return ProtocolKind::Adiabatic;
  throw ConfigError("unknown protocol '" + std::string(t) + "'");
}

}  // namespace

double parse_number(std::string_view text) {
  auto t = trim(text);
  double sign = 1.0;
  if (!t.empty() && (t.front() == '-' || t.front() == '+') && t.find("pi") != t.npos) {
    sign = t.front() == '-' ? -1.0 : 1.0;
    t.remove_prefix(1);
  }
  double value = 1.0;
  char op = '*';
  std::size_t start = 0;
  while (true) {
    const auto pos = t.find_first_of("*/", start);
    const double f = parse_factor(t.substr(start, pos == t.npos ? t.npos : pos - start));
    value = op == '*' ? value * f : value / f;
    if (pos == t.npos) break;
    op = t[pos];
    start = pos + 1;
  }
  return sign * value;
}

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::Design: return "design";
    case Mode::Simulate: return "simulate";
    case Mode::Compare: return "compare";
    case Mode::Sweep: return "sweep";
  }
  return "?";
}

std::string to_string(ProtocolKind kind) {
  return kind == ProtocolKind::Sta ? "sta" : "adiabatic";
}

void RunConfig::validate() const {
  scales.validate();
  if (distance == 0.0) throw ConfigError("d must be non-zero");
  if (!(duration > 0.0)) throw ConfigError("t_f must be positive");
  if (!(x_max > x_min)) throw ConfigError("x_max must exceed x_min");
  if (!is_power_of_two(grid_points) || grid_points < 2) {
    throw ConfigError("grid_points must be a power of two");
  }
  if (!(dt > 0.0) || !(dt < duration)) throw ConfigError("dt must satisfy 0 < dt < t_f");
  if (!(coupling >= 0.0)) throw ConfigError("gN must be non-negative");
  if (sample_every < 1) throw ConfigError("sample_every must be at least 1");
  for (double g : sweep_couplings) {
    if (!(g >= 0.0)) throw ConfigError("sweep_gN entries must be non-negative");
  }
  for (double f : snapshot_fractions) {
    if (!(f >= 0.0 && f <= 1.0)) throw ConfigError("snapshots must be fractions in [0, 1]");
  }
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != line.npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == line.npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) {
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
    try {
      if (key == "mode") cfg.mode = parse_mode(value);
      else if (key == "protocol") cfg.protocol = parse_protocol(value);
      else if (key == "d") cfg.distance = parse_number(value);
      else if (key == "t_f") cfg.duration = parse_number(value);
      else if (key == "alpha0") cfg.soc_strength = parse_number(value);
      else if (key == "m") cfg.scales.mass = parse_number(value);
      else if (key == "omega") cfg.scales.omega = parse_number(value);
      else if (key == "hbar") cfg.scales.hbar = parse_number(value);
      else if (key == "x_min") cfg.x_min = parse_number(value);
      else if (key == "x_max") cfg.x_max = parse_number(value);
      else if (key == "grid_points") cfg.grid_points = parse_count(value);
      else if (key == "dt") cfg.dt = parse_number(value);
      else if (key == "gN") cfg.coupling = parse_number(value);
      else if (key == "sample_every") cfg.sample_every = parse_count(value);
      else if (key == "midpoint_controls") cfg.midpoint_controls = parse_bool(value);
      else if (key == "out") cfg.out_dir = std::string(value);
      else if (key == "sweep_gN") cfg.sweep_couplings = parse_list(value);
      else if (key == "snapshots") cfg.snapshot_fractions = parse_list(value);
      else if (key == "sequential") cfg.sequential = parse_bool(value);
      else if (key == "threads") cfg.threads = parse_count(value);
      else throw ConfigError("unknown key '" + key + "'");
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace stasoc::cli
