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
#include <functional>
#include <stdexcept>
#include <vector>

#include "stasoc/fourier.hpp"
#include "stasoc/protocols.hpp"
#include "stasoc/spinor_field.hpp"

namespace stasoc {

struct EvolutionConfig {
  /// Effective mean-field coupling gN for a unit-norm field.
  double coupling = 0.0;
  /// Observer stride in steps.
  std::size_t sample_every = 1;
  /// Evaluate controls at t + dt/2 (second order) rather than at t.
  bool midpoint_controls = true;

  void validate() const {
    if (!(coupling >= 0.0)) throw std::invalid_argument("coupling gN must be non-negative");
    if (sample_every < 1) throw std::invalid_argument("sample_every must be at least 1");
  }
};

/// Thrown when the field stops being finite.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Called with the step index, the time and the field at that time.
using Observer = std::function<void(std::size_t, double, const SpinorField&)>;

/// Strang split-operator integrator for
///   i hbar dPsi/dt = [p^2/2m + m w^2 (x - x0)^2 / 2 + alpha p sz + gN |Psi|^2] Psi.
///
/// One step is a half step of the position-space factor (trap plus
/// spin-summed density), a full kinetic step in wavenumber space where
/// alpha p sz is diagonal, and a second position-space half step with the
/// post-kinetic density.
class SplitOperatorPropagator {
 public:
  SplitOperatorPropagator(GridPtr grid, PhysicalScales scales, EvolutionConfig config = {});

  const EvolutionConfig& config() const { return config_; }

  /// Advances `field` from t to t + dt in place.
  void step(SpinorField& field, double t, const ControlSchedule& controls);

  /// Runs the grid's n_steps steps from t = 0.
  SpinorField evolve(SpinorField initial, const ControlSchedule& controls,
                     const Observer& observer = {});

  /// Runs an explicit number of steps from t = 0. The observer sees step 0,
  /// every `sample_every`-th step and the last step.
  SpinorField evolve_steps(SpinorField initial, const ControlSchedule& controls,
                           std::size_t n_steps, const Observer& observer = {});

 private:
  void potential_half_step(SpinorField& field, double trap_position);
  void kinetic_step(SpinorField& field, double soc_strength);

  GridPtr grid_;
  PhysicalScales scales_;
  EvolutionConfig config_;
  FourierTransform fft_;
  double dt_;
  std::vector<cplx> free_factor_;
  std::vector<cplx> soc_factor_;
  double cached_soc_ = 0.0;
  bool soc_cached_ = false;
  std::vector<cplx> trap_factor_;
  double cached_trap_ = 0.0;
  bool trap_cached_ = false;
};

/// Single step on a copy, for callers that want value semantics.
SpinorField step(const SpinorField& field, double t, const ControlSchedule& controls,
                 const PhysicalScales& scales, const EvolutionConfig& config);

}  // namespace stasoc
