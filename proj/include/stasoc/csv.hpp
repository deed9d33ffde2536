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

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "stasoc/dynamics.hpp"
#include "stasoc/observables.hpp"
#include "stasoc/protocols.hpp"

namespace stasoc {

/// Comma-separated writer; every number is printed with 17 significant digits.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, std::initializer_list<std::string> header);

  void row(std::initializer_list<double> values);
  void row(std::span<const double> values);

 private:
  std::ofstream out_;
  std::size_t columns_;
};

std::string format_number(double v);

void write_control_trace(const std::filesystem::path& path, const ControlTrace& trace);
void write_auxiliary_trace(const std::filesystem::path& path, const AuxiliaryTrace& trace);
void write_observables(const std::filesystem::path& path,
                       const std::vector<ObservableRecord>& records);
void write_density(const std::filesystem::path& path, const SpinorField& field);

}  // namespace stasoc
