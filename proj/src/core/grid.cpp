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

#include "stasoc/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "stasoc/scales.hpp"

namespace stasoc {

SimulationGrid SimulationGrid::build(double x_min, double x_max, std::size_t n_points,
                                     double dt, double t_f) {
  if (!(x_max > x_min)) {
    throw std::invalid_argument("grid requires x_max > x_min");
  }
  if (!is_power_of_two(n_points) || n_points < 2) {
    throw std::invalid_argument("grid size must be a power of two >= 2, got " +
                                std::to_string(n_points));
  }
  if (!(dt > 0.0)) {
    throw std::invalid_argument("time step must be positive");
  }
  if (!(dt < t_f)) {
    throw std::invalid_argument("time step must be smaller than the duration");
  }

  SimulationGrid g;
  g.x_min_ = x_min;
  g.x_max_ = x_max;
  g.dx_ = (x_max - x_min) / static_cast<double>(n_points);
  g.dk_ = 2.0 * kPi / (static_cast<double>(n_points) * g.dx_);
  g.n_steps_ = static_cast<std::size_t>(std::llround(t_f / dt));
  g.dt_ = t_f / static_cast<double>(g.n_steps_);

  g.x_.resize(n_points);
  g.k_.resize(n_points);
  const auto n = static_cast<long>(n_points);
  for (long j = 0; j < n; ++j) {
    g.x_[j] = x_min + static_cast<double>(j) * g.dx_;
    const long m = j < n / 2 ? j : j - n;
    g.k_[j] = static_cast<double>(m) * g.dk_;
  }
  return g;
}

bool SimulationGrid::same_space(const SimulationGrid& other) const {
  return size() == other.size() && x_min_ == other.x_min_ && x_max_ == other.x_max_;
}

SimulationGrid SimulationGrid::with_time_step(double dt, double t_f) const {
  return build(x_min_, x_max_, size(), dt, t_f);
}

}  // namespace stasoc
