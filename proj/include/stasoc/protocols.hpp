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
#include <string>
#include <vector>

#include "stasoc/scales.hpp"

namespace stasoc {

/// A scalar trajectory and its first two time derivatives.
struct Jet {
  double value = 0.0;
  double rate = 0.0;
  double acceleration = 0.0;
};

/// Instantaneous control values: trap minimum x0 and SOC strength alpha.
struct ControlPoint {
  double trap_position = 0.0;
  double soc_strength = 0.0;
};

struct StaParameters {
  double distance = 10.0;
  double duration = 8.0;
  PhysicalScales scales;
};

struct AdiabaticParameters {
  double soc_strength = 1.0;
  double distance = 10.0;
  double duration = 100.0 * kPi;
  PhysicalScales scales;
};

/// Relative width of the rejected band around the pole 5 omega^2 t_f^2 = 66.
inline constexpr double kSingularityGuard = 1e-3;

/// Inverse-engineered transport with simultaneous spin flip.
///
/// The centre of mass follows the quintic x_c = d (10 s^3 - 15 s^4 + 6 s^5),
/// s = t/t_f, and the SOC auxiliary the sextic a_c = C s^3 (s - 1)^3 with
/// C = -231 pi (hbar / m d) w^2 t_f^2 / (5 w^2 t_f^2 - 66), chosen so the
/// accumulated spin phase is pi/2. The controls follow from the auxiliary
/// equations: x0 = x_c + x_c''/w^2 and alpha = a_c + a_c''/w^2. All of x_c',
/// x_c'', a_c, a_c', a_c'' vanish at both ends.
class StaProtocol {
 public:
  /// Throws std::invalid_argument for t_f <= 0, d == 0 or a design inside
  /// the singular band.
  explicit StaProtocol(StaParameters params);

  const StaParameters& parameters() const { return params_; }
  double distance() const { return params_.distance; }
  double duration() const { return params_.duration; }
  const PhysicalScales& scales() const { return params_.scales; }
  double soc_amplitude() const { return soc_amplitude_; }

  Jet center_of_mass(double t) const;
  double trap_position(double t) const;
  Jet soc_auxiliary(double t) const;
  double soc_strength(double t) const;
  ControlPoint controls(double t) const;

 private:
  void check_time(double t) const;

  StaParameters params_;
  double soc_amplitude_;
};

/// Linear ramp x0 = d t / t_f at constant SOC strength.
class AdiabaticProtocol {
 public:
  explicit AdiabaticProtocol(AdiabaticParameters params);

  const AdiabaticParameters& parameters() const { return params_; }
  double distance() const { return params_.distance; }
  double duration() const { return params_.duration; }
  const PhysicalScales& scales() const { return params_.scales; }

  /// Exact response of the trapped centre of mass to the ramp, starting at rest.
  Jet center_of_mass(double t) const;
  double trap_position(double t) const;
  /// a_c = alpha0 (1 - cos w t).
  Jet soc_auxiliary(double t) const;
  double soc_strength(double t) const;
  ControlPoint controls(double t) const;

  /// Closed form -(m alpha0 d / hbar w t_f) [sin w t_f - w t_f cos w t_f].
  double closed_form_spin_phase() const;

 private:
  void check_time(double t) const;

  AdiabaticParameters params_;
};

/// Type-erased control law on [0, duration]. Evaluation outside the interval
/// is clamped, which only matters for round-off at the end points.
class ControlSchedule {
 public:
  ControlSchedule(std::function<ControlPoint(double)> law, double duration);

  static ControlSchedule from(const StaProtocol& p);
  static ControlSchedule from(const AdiabaticProtocol& p);
  /// x0 = alpha = 0 for the given duration.
  static ControlSchedule idle(double duration);

  ControlPoint at(double t) const;
  double duration() const { return duration_; }

  /// Controls played backwards: t -> duration - t.
  ControlSchedule reversed() const;

 private:
  std::function<ControlPoint(double)> law_;
  double duration_;
};

/// Controls and auxiliary functions sampled on a uniform time grid.
struct ControlTrace {
  std::vector<double> times;
  std::vector<double> trap_position;
  std::vector<double> soc_strength;
  std::vector<double> center_of_mass;
  std::vector<double> soc_auxiliary;
  std::vector<double> soc_auxiliary_rate;

  std::size_t size() const { return times.size(); }
};

ControlTrace sample_controls(const StaProtocol& p, std::size_t n_samples);
ControlTrace sample_controls(const AdiabaticProtocol& p, std::size_t n_samples);

/// Spin phase -(m/hbar) int_0^{t_f} a_c'(t) x0(t) dt by composite Simpson.
///
/// Needs an odd sample count with (n - 1) divisible by 4 so that the Simpson
/// rule on every other sample gives a Richardson error estimate; throws
/// std::domain_error when that estimate exceeds `tolerance`.
double phase_sigma(const ControlTrace& trace, const PhysicalScales& scales,
                   double tolerance = 1e-8);

/// Same integral from the closed forms, refining from 4001 samples until the
/// quadrature error estimate is below `tolerance`.
double phase_sigma(const StaProtocol& p, double tolerance = 1e-10);
double phase_sigma(const AdiabaticProtocol& p, double tolerance = 1e-10);

/// d_sp = (pi/2) hbar / (m alpha0): transport distance per adiabatic spin flip.
double spin_flip_length(double soc_strength, const PhysicalScales& scales);
/// t_sp = (d_sp / d) t_f.
double spin_flip_time(const AdiabaticProtocol& p);

struct ValidationWarning {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationWarning> warnings;

  // STA designs.
  bool singular = false;
  /// |5 w^2 t_f^2 - 66| / 66.
  double singular_distance = 0.0;
  double peak_soc_strength = 0.0;

  // Adiabatic designs.
  bool residual_excitation = false;
  bool adiabaticity_violated = false;
  double adiabatic_time_bound = 0.0;

  bool ok() const { return warnings.empty(); }
  bool has(const std::string& code) const;
};

ValidationReport validate(const StaParameters& p);
ValidationReport validate(const AdiabaticParameters& p);

}  // namespace stasoc
