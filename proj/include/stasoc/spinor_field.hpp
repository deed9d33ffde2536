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

#include <cmath>
#include <complex>
#include <memory>
#include <span>
#include <vector>

#include "stasoc/grid.hpp"

namespace stasoc {

using cplx = std::complex<double>;

/// Two-component spin state in the sigma_z basis.
struct Spinor {
  cplx up;
  cplx down;

  static Spinor spin_up() { return {1.0, 0.0}; }
  static Spinor spin_down() { return {0.0, 1.0}; }
  /// (1, sign)/sqrt(2): sigma_x eigenstate with eigenvalue sign.
  static Spinor sigma_x(int sign);

  double norm() const { return std::sqrt(std::norm(up) + std::norm(down)); }
};

using GridPtr = std::shared_ptr<const SimulationGrid>;

/// Spin-up and spin-down amplitudes on a shared, immutable grid.
class SpinorField {
 public:
  explicit SpinorField(GridPtr grid);
  SpinorField(GridPtr grid, std::vector<cplx> up, std::vector<cplx> down);

  /// chi (x) orbital.
  static SpinorField product(GridPtr grid, Spinor chi,
                             std::span<const double> orbital);

  const SimulationGrid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  std::size_t size() const { return up_.size(); }

  std::span<cplx> up() { return up_; }
  std::span<cplx> down() { return down_; }
  std::span<const cplx> up() const { return up_; }
  std::span<const cplx> down() const { return down_; }
  std::span<cplx> component(int sign) { return sign > 0 ? up() : down(); }
  std::span<const cplx> component(int sign) const { return sign > 0 ? up() : down(); }

  SpinorField& operator*=(cplx factor);

  bool all_finite() const;

 private:
  GridPtr grid_;
  std::vector<cplx> up_;
  std::vector<cplx> down_;
};

/// sqrt of the rectangle-rule integral of |up|^2 + |down|^2.
double norm(const SpinorField& field);

/// Integral of conj(a) b summed over spin; conjugates the first argument.
cplx inner_product(const SpinorField& a, const SpinorField& b);

/// L2 distance sqrt(int |a - b|^2 dx) summed over spin.
double distance(const SpinorField& a, const SpinorField& b);

/// max over nodes and components of |a - b|.
double max_abs_difference(const SpinorField& a, const SpinorField& b);

}  // namespace stasoc
