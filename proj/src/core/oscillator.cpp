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

#include "stasoc/oscillator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace stasoc {

namespace {

constexpr double kTailLimit = 1e-12;

// Normalised Hermite functions by the three-term recurrence, stable for large n.
double hermite_function(int n, double xi) {
  const double g = std::pow(kPi, -0.25) * std::exp(-0.5 * xi * xi);
  if (n == 0) return g;
  double prev = g;
  double cur = std::sqrt(2.0) * xi * g;
  for (int j = 1; j < n; ++j) {
    const double next = std::sqrt(2.0 / (j + 1)) * xi * cur - std::sqrt(static_cast<double>(j) / (j + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

double oscillator_energy(int n, const PhysicalScales& scales) {
  return (n + 0.5) * scales.hbar * scales.omega;
}

std::vector<double> harmonic_eigenstate(int n, const PhysicalScales& scales,
                                        const SimulationGrid& grid, double center) {
  if (n < 0) throw std::invalid_argument("quantum number must be non-negative");
  scales.validate();
  const double a = scales.oscillator_length();
  const double amplitude = 1.0 / std::sqrt(a);

  for (double edge : {grid.x_min(), grid.x_max()}) {
    const double tail = std::abs(amplitude * hermite_function(n, (edge - center) / a));
    if (tail > kTailLimit) {
      throw std::invalid_argument("grid too narrow for oscillator level " + std::to_string(n) +
                                  ": boundary amplitude " + std::to_string(tail));
    }
  }

  std::vector<double> psi(grid.size());
  const auto x = grid.x();
  for (std::size_t j = 0; j < psi.size(); ++j) {
    psi[j] = amplitude * hermite_function(n, (x[j] - center) / a);
  }
  return psi;
}

}  // namespace stasoc
