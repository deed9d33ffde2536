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

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "stasoc/dynamics.hpp"

namespace stasoc {

namespace {

using State = std::array<double, 7>;
enum : std::size_t { kXc, kXcRate, kAc, kAcRate, kPhaseAlpha, kPhaseTrap, kPhaseSpin };

class AuxiliarySystem {
 public:
  AuxiliarySystem(const ControlSchedule& controls, const PhysicalScales& scales)
      : controls_(controls), s_(scales) {}

  State rate(double t, const State& y) const {
    ControlPoint c;
    try {
      c = controls_.at(t);
    } catch (const std::exception& e) {
      throw std::runtime_error("control evaluation failed at t = " + std::to_string(t) + ": " +
                               e.what());
    }
    if (!std::isfinite(c.trap_position) || !std::isfinite(c.soc_strength)) {
      throw std::runtime_error("non-finite control at t = " + std::to_string(t));
    }
    const double m = s_.mass, w2 = s_.omega * s_.omega, hbar = s_.hbar;
    const double displacement = y[kXc] - c.trap_position;
    const double l_alpha = 0.5 * m * y[kAcRate] * y[kAcRate] / w2 - 0.5 * m * y[kAc] * y[kAc] +
                           m * y[kAc] * c.soc_strength;
    const double l_trap = 0.5 * m * y[kXcRate] * y[kXcRate] - 0.5 * m * w2 * displacement * displacement;
    return {y[kXcRate],
            -w2 * displacement,
            y[kAcRate],
            -w2 * (y[kAc] - c.soc_strength),
            -l_alpha / hbar,
            -l_trap / hbar,
            -(m / hbar) * y[kAcRate] * c.trap_position};
  }

  State rk4(double t, const State& y, double h) const {
    auto axpy = [](const State& a, double f, const State& b) {
      State r;
      for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + f * b[i];
      return r;
    };
    const State k1 = rate(t, y);
    const State k2 = rate(t + 0.5 * h, axpy(y, 0.5 * h, k1));
    const State k3 = rate(t + 0.5 * h, axpy(y, 0.5 * h, k2));
    const State k4 = rate(t + h, axpy(y, h, k3));
    State r;
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return r;
  }

 private:
  const ControlSchedule& controls_;
  PhysicalScales s_;
};

}  // namespace

std::size_t AuxiliaryTrace::index_of(double t) const {
  if (times.empty() || !(dt > 0.0)) throw std::domain_error("empty auxiliary trace");
  const double pos = t / dt;
  const long i = std::lround(pos);
  if (i < 0 || static_cast<std::size_t>(i) >= times.size() ||
      std::abs(times[static_cast<std::size_t>(i)] - t) > 1e-6 * dt) {
    throw std::domain_error("time " + std::to_string(t) + " is not a trace sample");
  }
  return static_cast<std::size_t>(i);
}

AuxiliaryTrace integrate_auxiliary(const ControlSchedule& controls, const PhysicalScales& scales,
                                   std::size_t n_samples, AuxiliaryOptions options) {
  scales.validate();
  if (n_samples < 2) throw std::invalid_argument("auxiliary trace needs at least two samples");

  AuxiliaryTrace trace;
  trace.scales = scales;
  trace.dt = controls.duration() / static_cast<double>(n_samples - 1);
  for (auto* v : {&trace.times, &trace.center_of_mass, &trace.center_of_mass_rate,
                  &trace.soc_auxiliary, &trace.soc_auxiliary_rate, &trace.phase_alpha,
                  &trace.phase_trap, &trace.phase_spin}) {
    v->resize(n_samples);
  }

  const AuxiliarySystem system(controls, scales);
  const double h = trace.dt;
  State y{};
  auto store = [&](std::size_t i, double t) {
    trace.times[i] = t;
    trace.center_of_mass[i] = y[kXc];
    trace.center_of_mass_rate[i] = y[kXcRate];
    trace.soc_auxiliary[i] = y[kAc];
    trace.soc_auxiliary_rate[i] = y[kAcRate];
    trace.phase_alpha[i] = y[kPhaseAlpha];
    trace.phase_trap[i] = y[kPhaseTrap];
    trace.phase_spin[i] = y[kPhaseSpin];
  };
  store(0, 0.0);
  for (std::size_t i = 1; i < n_samples; ++i) {
    const double t = h * static_cast<double>(i - 1);
    const State full = system.rk4(t, y, h);
    const State half = system.rk4(t + 0.5 * h, system.rk4(t, y, 0.5 * h), 0.5 * h);
    double estimate = 0.0;
    for (std::size_t c = 0; c < y.size(); ++c) {
      estimate = std::max(estimate, std::abs(half[c] - full[c]) / 15.0 / std::max(1.0, std::abs(full[c])));
    }
    if (estimate > options.step_tolerance) {
      throw std::domain_error("auxiliary step size " + std::to_string(h) +
                              " too large: error estimate " + std::to_string(estimate));
    }
    y = full;
    store(i, h * static_cast<double>(i));
  }
  return trace;
}

}  // namespace stasoc
