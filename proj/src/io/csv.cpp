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

#include "stasoc/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace stasoc {

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, std::initializer_list<std::string> header)
    : out_(path), columns_(header.size()) {
  if (!out_) throw std::runtime_error("cannot open " + path.string() + " for writing");
  bool first = true;
  for (const auto& h : header) {
    out_ << (first ? "" : ",") << h;
    first = false;
  }
  out_ << '\n';
}

void CsvWriter::row(std::initializer_list<double> values) {
  row(std::span<const double>(values.begin(), values.size()));
}

void CsvWriter::row(std::span<const double> values) {
  if (values.size() != columns_) throw std::invalid_argument("CSV row width mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) {
    out_ << (i ? "," : "") << format_number(values[i]);
  }
  out_ << '\n';
  if (!out_) throw std::runtime_error("CSV write failed");
}

void write_control_trace(const std::filesystem::path& path, const ControlTrace& trace) {
  CsvWriter csv(path, {"t", "x0", "alpha", "xc", "ac"});
  for (std::size_t i = 0; i < trace.size(); ++i) {
    csv.row({trace.times[i], trace.trap_position[i], trace.soc_strength[i],
             trace.center_of_mass[i], trace.soc_auxiliary[i]});
  }
}

void write_auxiliary_trace(const std::filesystem::path& path, const AuxiliaryTrace& trace) {
  CsvWriter csv(path, {"t", "xc", "xc_dot", "ac", "ac_dot", "phi_alpha", "phi_x0", "phi_sigma"});
  for (std::size_t i = 0; i < trace.size(); ++i) {
    csv.row({trace.times[i], trace.center_of_mass[i], trace.center_of_mass_rate[i],
             trace.soc_auxiliary[i], trace.soc_auxiliary_rate[i], trace.phase_alpha[i],
             trace.phase_trap[i], trace.phase_spin[i]});
  }
}

void write_observables(const std::filesystem::path& path,
                       const std::vector<ObservableRecord>& records) {
  CsvWriter csv(path, {"t", "com", "mom", "vel", "sx", "sy", "sz", "P", "norm"});
  for (const auto& r : records) {
    csv.row({r.t, r.com, r.mom, r.vel, r.sx, r.sy, r.sz, r.bloch, r.norm});
  }
}

void write_density(const std::filesystem::path& path, const SpinorField& field) {
  const auto profiles = density_profiles(field);
  const auto x = field.grid().x();
  CsvWriter csv(path, {"x", "total", "up", "down"});
  for (std::size_t j = 0; j < x.size(); ++j) {
    csv.row({x[j], profiles.total[j], profiles.up[j], profiles.down[j]});
  }
}

}  // namespace stasoc
