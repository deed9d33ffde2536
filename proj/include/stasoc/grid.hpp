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
#include <span>
#include <vector>

namespace stasoc {

/// Uniform periodic position grid, its FFT-dual wavenumber grid and the time
/// discretisation shared by the propagator and the analytic oracle.
///
/// Nodes are x_j = x_min + j*dx for j in [0, n). Wavenumbers follow the
/// standard FFT ordering k_j = j*dk for j < n/2 and (j - n)*dk otherwise, so
/// the Nyquist mode carries k = -n*dk/2.
///
/// The time step is stored as t_f / n_steps, which differs from the requested
/// step by at most dt/2 relative to t_f and makes the last step land on t_f.
class SimulationGrid {
 public:
  static SimulationGrid build(double x_min, double x_max, std::size_t n_points,
                              double dt, double t_f);

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  double dx() const { return dx_; }
  double dk() const { return dk_; }
  double dt() const { return dt_; }
  double duration() const { return dt_ * static_cast<double>(n_steps_); }
  std::size_t size() const { return x_.size(); }
  std::size_t n_steps() const { return n_steps_; }

  std::span<const double> x() const { return x_; }
  std::span<const double> k() const { return k_; }

  /// Same spatial discretisation (time stepping may differ).
  bool same_space(const SimulationGrid& other) const;

  /// Copy of this grid with a different time discretisation.
  SimulationGrid with_time_step(double dt, double t_f) const;

 private:
  SimulationGrid() = default;

  double x_min_ = 0.0;
  double x_max_ = 0.0;
  double dx_ = 0.0;
  double dk_ = 0.0;
  double dt_ = 0.0;
  std::size_t n_steps_ = 0;
  std::vector<double> x_;
  std::vector<double> k_;
};

constexpr bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace stasoc
