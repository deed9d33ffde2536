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

#include <cmath>
#include <string>

#include "stasoc/propagator.hpp"

namespace stasoc {

SplitOperatorPropagator::SplitOperatorPropagator(GridPtr grid, PhysicalScales scales,
                                                 EvolutionConfig config)
    : grid_(std::move(grid)),
      scales_(scales),
      config_(config),
      fft_(grid_->size()),
      dt_(grid_->dt()),
      free_factor_(grid_->size()),
      soc_factor_(grid_->size()),
      trap_factor_(grid_->size()) {
  scales_.validate();
  config_.validate();
  const auto k = grid_->k();
  for (std::size_t j = 0; j < k.size(); ++j) {
    free_factor_[j] = std::polar(1.0, -dt_ * scales_.hbar * k[j] * k[j] / (2.0 * scales_.mass));
  }
}

void SplitOperatorPropagator::potential_half_step(SpinorField& field, double trap_position) {
  const auto x = grid_->x();
  const double half = 0.5 * dt_ / scales_.hbar;
  const double spring = 0.5 * scales_.mass * scales_.omega * scales_.omega;
  auto up = field.up();
  auto down = field.down();
  if (config_.coupling == 0.0) {
    if (!trap_cached_ || cached_trap_ != trap_position) {
      for (std::size_t j = 0; j < x.size(); ++j) {
        const double r = x[j] - trap_position;
        trap_factor_[j] = std::polar(1.0, -half * spring * r * r);
      }
      cached_trap_ = trap_position;
      trap_cached_ = true;
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
      up[j] *= trap_factor_[j];
      down[j] *= trap_factor_[j];
    }
    return;
  }
  const double g = config_.coupling;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double r = x[j] - trap_position;
    const double density = std::norm(up[j]) + std::norm(down[j]);
    const cplx f = std::polar(1.0, -half * (spring * r * r + g * density));
    up[j] *= f;
    down[j] *= f;
  }
}

void SplitOperatorPropagator::kinetic_step(SpinorField& field, double soc_strength) {
  if (!soc_cached_ || cached_soc_ != soc_strength) {
    const auto k = grid_->k();
    for (std::size_t j = 0; j < k.size(); ++j) {
      soc_factor_[j] = std::polar(1.0, -dt_ * soc_strength * k[j]);
    }
    cached_soc_ = soc_strength;
    soc_cached_ = true;
  }
  auto up = field.up();
  auto down = field.down();
  fft_.forward(up);
  fft_.forward(down);
  // The spin-down SOC phase is the conjugate of the spin-up one.
  for (std::size_t j = 0; j < up.size(); ++j) {
    up[j] *= free_factor_[j] * soc_factor_[j];
    down[j] *= free_factor_[j] * std::conj(soc_factor_[j]);
  }
  fft_.inverse(up);
  fft_.inverse(down);
}

void SplitOperatorPropagator::step(SpinorField& field, double t, const ControlSchedule& controls) {
  if (!field.grid().same_space(*grid_)) {
    throw std::invalid_argument("field grid does not match the propagator grid");
  }
  const ControlPoint c = controls.at(config_.midpoint_controls ? t + 0.5 * dt_ : t);
  potential_half_step(field, c.trap_position);
  kinetic_step(field, c.soc_strength);
  potential_half_step(field, c.trap_position);

  double sum = 0.0;
  for (const auto& v : field.up()) sum += std::norm(v);
  for (const auto& v : field.down()) sum += std::norm(v);
  if (!std::isfinite(sum)) {
    throw NumericalError("non-finite field after step at t = " + std::to_string(t));
  }
}

SpinorField SplitOperatorPropagator::evolve(SpinorField initial, const ControlSchedule& controls,
                                            const Observer& observer) {
  const double mismatch = std::abs(controls.duration() - grid_->duration());
  if (mismatch > 1e-9 * std::max(1.0, grid_->duration())) {
    throw std::invalid_argument("schedule duration " + std::to_string(controls.duration()) +
                                " does not match the grid duration " +
                                std::to_string(grid_->duration()));
  }
  return evolve_steps(std::move(initial), controls, grid_->n_steps(), observer);
}

SpinorField SplitOperatorPropagator::evolve_steps(SpinorField initial,
                                                  const ControlSchedule& controls,
                                                  std::size_t n_steps, const Observer& observer) {
  SpinorField field = std::move(initial);
  if (observer) observer(0, 0.0, field);
  for (std::size_t i = 0; i < n_steps; ++i) {
    step(field, dt_ * static_cast<double>(i), controls);
    const std::size_t done = i + 1;
    if (observer && (done % config_.sample_every == 0 || done == n_steps)) {
      observer(done, dt_ * static_cast<double>(done), field);
    }
  }
  return field;
}

SpinorField step(const SpinorField& field, double t, const ControlSchedule& controls,
                 const PhysicalScales& scales, const EvolutionConfig& config) {
  SplitOperatorPropagator propagator(field.grid_ptr(), scales, config);
  SpinorField next = field;
  propagator.step(next, t, controls);
  return next;
}

}  // namespace stasoc
