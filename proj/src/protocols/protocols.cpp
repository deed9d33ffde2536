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

#include "stasoc/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace stasoc {

namespace {

void require_in_window(double t, double duration) {
  const double slack = 1e-12 * duration;
  if (!(t >= -slack && t <= duration + slack)) {
    throw std::domain_error("time " + std::to_string(t) + " outside protocol window [0, " +
                            std::to_string(duration) + "]");
  }
}

double singular_offset(double omega, double duration) {
  return 5.0 * omega * omega * duration * duration - 66.0;
}

}  // namespace

StaProtocol::StaProtocol(StaParameters params) : params_(params) {
  params_.scales.validate();
  if (!(params_.duration > 0.0)) throw std::invalid_argument("STA duration must be positive");
  if (params_.distance == 0.0) throw std::invalid_argument("STA distance must be non-zero");
  const double w = params_.scales.omega;
  const double offset = singular_offset(w, params_.duration);
  if (std::abs(offset) < kSingularityGuard * 66.0) {
    throw std::invalid_argument(
        "singular STA design: |5 omega^2 t_f^2 - 66| = " + std::to_string(std::abs(offset)) +
        " is below the guard " + std::to_string(kSingularityGuard * 66.0) +
        " (pole at t_f = sqrt(66/5)/omega = " + std::to_string(std::sqrt(66.0 / 5.0) / w) + ")");
  }
  const auto& s = params_.scales;
  const double wt2 = w * w * params_.duration * params_.duration;
  soc_amplitude_ = -231.0 * kPi * (s.hbar / (s.mass * params_.distance)) * wt2 / offset;
}

void StaProtocol::check_time(double t) const { require_in_window(t, params_.duration); }

Jet StaProtocol::center_of_mass(double t) const {
  check_time(t);
  const double tf = params_.duration;
  const double d = params_.distance;
  const double s = std::clamp(t / tf, 0.0, 1.0);
  const double s2 = s * s;
  const double s3 = s2 * s;
  return {d * s3 * (10.0 - 15.0 * s + 6.0 * s2),
          d * s2 * (30.0 - 60.0 * s + 30.0 * s2) / tf,
          d * s * (60.0 - 180.0 * s + 120.0 * s2) / (tf * tf)};
}

double StaProtocol::trap_position(double t) const {
  const Jet xc = center_of_mass(t);
  const double w = params_.scales.omega;
  return xc.value + xc.acceleration / (w * w);
}

Jet StaProtocol::soc_auxiliary(double t) const {
  check_time(t);
  const double tf = params_.duration;
  const double c = soc_amplitude_;
  const double s = std::clamp(t / tf, 0.0, 1.0);
  const double s2 = s * s;
  const double s3 = s2 * s;
  // s^3 (s - 1)^3 = s^6 - 3 s^5 + 3 s^4 - s^3
  return {c * s3 * (s3 - 3.0 * s2 + 3.0 * s - 1.0),
          c * s2 * (6.0 * s3 - 15.0 * s2 + 12.0 * s - 3.0) / tf,
          c * s * (30.0 * s3 - 60.0 * s2 + 36.0 * s - 6.0) / (tf * tf)};
}

double StaProtocol::soc_strength(double t) const {
  const Jet ac = soc_auxiliary(t);
  const double w = params_.scales.omega;
  return ac.value + ac.acceleration / (w * w);
}

ControlPoint StaProtocol::controls(double t) const {
  return {trap_position(t), soc_strength(t)};
}

AdiabaticProtocol::AdiabaticProtocol(AdiabaticParameters params) : params_(params) {
  params_.scales.validate();
  if (!(params_.duration > 0.0)) throw std::invalid_argument("adiabatic duration must be positive");
}

void AdiabaticProtocol::check_time(double t) const { require_in_window(t, params_.duration); }

Jet AdiabaticProtocol::center_of_mass(double t) const {
  check_time(t);
  const double w = params_.scales.omega;
  const double v = params_.distance / params_.duration;
  return {v * (t - std::sin(w * t) / w), v * (1.0 - std::cos(w * t)), v * w * std::sin(w * t)};
}

double AdiabaticProtocol::trap_position(double t) const {
  check_time(t);
  return params_.distance * t / params_.duration;
}

Jet AdiabaticProtocol::soc_auxiliary(double t) const {
  check_time(t);
  const double w = params_.scales.omega;
  const double a = params_.soc_strength;
  return {a * (1.0 - std::cos(w * t)), a * w * std::sin(w * t), a * w * w * std::cos(w * t)};
}

double AdiabaticProtocol::soc_strength(double t) const {
  check_time(t);
  return params_.soc_strength;
}

ControlPoint AdiabaticProtocol::controls(double t) const {
  return {trap_position(t), soc_strength(t)};
}

double AdiabaticProtocol::closed_form_spin_phase() const {
  const auto& s = params_.scales;
  const double wt = s.omega * params_.duration;
  return -(s.mass * params_.soc_strength * params_.distance / (s.hbar * wt)) *
         (std::sin(wt) - wt * std::cos(wt));
}

ControlSchedule::ControlSchedule(std::function<ControlPoint(double)> law, double duration)
    : law_(std::move(law)), duration_(duration) {
  if (!law_) throw std::invalid_argument("empty control law");
  if (!(duration_ >= 0.0)) throw std::invalid_argument("negative schedule duration");
}

ControlSchedule ControlSchedule::from(const StaProtocol& p) {
  return {[p](double t) { return p.controls(t); }, p.duration()};
}

ControlSchedule ControlSchedule::from(const AdiabaticProtocol& p) {
  return {[p](double t) { return p.controls(t); }, p.duration()};
}

ControlSchedule ControlSchedule::idle(double duration) {
  return {[](double) { return ControlPoint{}; }, duration};
}

ControlPoint ControlSchedule::at(double t) const {
  return law_(std::clamp(t, 0.0, duration_));
}

ControlSchedule ControlSchedule::reversed() const {
  auto law = law_;
  const double T = duration_;
  return {[law, T](double t) { return law(std::clamp(T - t, 0.0, T)); }, T};
}

namespace {

template <class Protocol>
ControlTrace sample(const Protocol& p, std::size_t n_samples) {
  if (n_samples < 2) throw std::invalid_argument("control trace needs at least two samples");
  ControlTrace trace;
  trace.times.resize(n_samples);
  trace.trap_position.resize(n_samples);
  trace.soc_strength.resize(n_samples);
  trace.center_of_mass.resize(n_samples);
  trace.soc_auxiliary.resize(n_samples);
  trace.soc_auxiliary_rate.resize(n_samples);
  const double h = p.duration() / static_cast<double>(n_samples - 1);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double t = i + 1 == n_samples ? p.duration() : h * static_cast<double>(i);
    const Jet ac = p.soc_auxiliary(t);
    trace.times[i] = t;
    trace.trap_position[i] = p.trap_position(t);
    trace.soc_strength[i] = p.soc_strength(t);
    trace.center_of_mass[i] = p.center_of_mass(t).value;
    trace.soc_auxiliary[i] = ac.value;
    trace.soc_auxiliary_rate[i] = ac.rate;
  }
  return trace;
}

}  // namespace

ControlTrace sample_controls(const StaProtocol& p, std::size_t n_samples) {
  return sample(p, n_samples);
}

ControlTrace sample_controls(const AdiabaticProtocol& p, std::size_t n_samples) {
  return sample(p, n_samples);
}

double spin_flip_length(double soc_strength, const PhysicalScales& scales) {
  if (soc_strength == 0.0) throw std::invalid_argument("spin-flip length undefined for zero SOC");
  scales.validate();
  return 0.5 * kPi * scales.hbar / (scales.mass * soc_strength);
}

double spin_flip_time(const AdiabaticProtocol& p) {
  return spin_flip_length(p.parameters().soc_strength, p.scales()) / p.distance() * p.duration();
}

}  // namespace stasoc
