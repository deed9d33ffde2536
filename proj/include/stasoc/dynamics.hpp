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
#include <vector>

#include "stasoc/protocols.hpp"
#include "stasoc/spinor_field.hpp"

namespace stasoc {

/// Auxiliary trajectories and accumulated phases on a uniform time grid.
/// The first sample is the rest state: every field is zero.
struct AuxiliaryTrace {
  PhysicalScales scales;
  double dt = 0.0;
  std::vector<double> times;
  std::vector<double> center_of_mass;       // x_c
  std::vector<double> center_of_mass_rate;  // x_c'
  std::vector<double> soc_auxiliary;        // a_c
  std::vector<double> soc_auxiliary_rate;   // a_c'
  std::vector<double> phase_alpha;          // -(1/hbar) int L_alpha
  std::vector<double> phase_trap;           // -(1/hbar) int L_x0
  std::vector<double> phase_spin;           // -(m/hbar) int a_c' x0

  std::size_t size() const { return times.size(); }
  /// Index of the sample at time t; throws std::domain_error if t is not a
  /// sample instant.
  std::size_t index_of(double t) const;
};

struct AuxiliaryOptions {
  /// Largest accepted step-doubling error estimate per RK4 step, relative to
  /// max(1, |y|).
  double step_tolerance = 1e-8;
};

/// Integrates x_c'' = -w^2 (x_c - x0) and a_c'' = -w^2 (a_c - alpha) from rest
/// together with the three phase integrals, using classical RK4 with
/// n_samples - 1 equal steps over the schedule duration.
AuxiliaryTrace integrate_auxiliary(const ControlSchedule& controls, const PhysicalScales& scales,
                                   std::size_t n_samples, AuxiliaryOptions options = {});

/// Exact solution of the linear problem started in chi (x) psi_n:
///
///   e^{-i E_n t/hbar} e^{-i phi_alpha} e^{-i phi_sigma sz} e^{-i m a_c x sz/hbar}
///   e^{-i a_c' p sz/(hbar w^2)} e^{-i phi_x0} e^{-i x_c p/hbar} e^{i m x_c' x/hbar} psi_n chi
///
/// with the rightmost factor applied first. Translations are spectral.
SpinorField exact_state(const AuxiliaryTrace& trace, double t, int n, Spinor chi, GridPtr grid);

}  // namespace stasoc
