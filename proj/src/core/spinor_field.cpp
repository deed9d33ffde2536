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

#include "stasoc/spinor_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace stasoc {

Spinor Spinor::sigma_x(int sign) {
  const double h = 1.0 / std::sqrt(2.0);
  return {h, sign >= 0 ? h : -h};
}

SpinorField::SpinorField(GridPtr grid)
    : grid_(std::move(grid)), up_(grid_->size()), down_(grid_->size()) {}

SpinorField::SpinorField(GridPtr grid, std::vector<cplx> up, std::vector<cplx> down)
    : grid_(std::move(grid)), up_(std::move(up)), down_(std::move(down)) {
  if (up_.size() != grid_->size() || down_.size() != grid_->size()) {
    throw std::invalid_argument("spinor components must match the grid size");
  }
}

SpinorField SpinorField::product(GridPtr grid, Spinor chi, std::span<const double> orbital) {
  if (orbital.size() != grid->size()) {
    throw std::invalid_argument("orbital length does not match the grid");
  }
  SpinorField f(std::move(grid));
  for (std::size_t j = 0; j < orbital.size(); ++j) {
    f.up_[j] = chi.up * orbital[j];
    f.down_[j] = chi.down * orbital[j];
  }
  return f;
}

SpinorField& SpinorField::operator*=(cplx factor) {
  for (auto& v : up_) v *= factor;
  for (auto& v : down_) v *= factor;
  return *this;
}

bool SpinorField::all_finite() const {
  auto finite = [](const cplx& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); };
  return std::all_of(up_.begin(), up_.end(), finite) &&
         std::all_of(down_.begin(), down_.end(), finite);
}

namespace {

void require_same_space(const SpinorField& a, const SpinorField& b) {
  if (a.grid_ptr() != b.grid_ptr() && !a.grid().same_space(b.grid())) {
    throw std::invalid_argument("fields live on different grids");
  }
}

}  // namespace

double norm(const SpinorField& field) {
  double sum = 0.0;
  for (const auto& v : field.up()) sum += std::norm(v);
  for (const auto& v : field.down()) sum += std::norm(v);
  return std::sqrt(sum * field.grid().dx());
}

cplx inner_product(const SpinorField& a, const SpinorField& b) {
  require_same_space(a, b);
  cplx sum = 0.0;
  const auto au = a.up(), ad = a.down(), bu = b.up(), bd = b.down();
  for (std::size_t j = 0; j < au.size(); ++j) {
    sum += std::conj(au[j]) * bu[j] + std::conj(ad[j]) * bd[j];
  }
  return sum * a.grid().dx();
}

double distance(const SpinorField& a, const SpinorField& b) {
  require_same_space(a, b);
  double sum = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    sum += std::norm(a.up()[j] - b.up()[j]) + std::norm(a.down()[j] - b.down()[j]);
  }
  return std::sqrt(sum * a.grid().dx());
}

double max_abs_difference(const SpinorField& a, const SpinorField& b) {
  require_same_space(a, b);
  double worst = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    worst = std::max(worst, std::abs(a.up()[j] - b.up()[j]));
    worst = std::max(worst, std::abs(a.down()[j] - b.down()[j]));
  }
  return worst;
}

}  // namespace stasoc
