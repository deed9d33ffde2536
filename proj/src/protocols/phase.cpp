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
#include <cmath>
#include <stdexcept>
#include <string>

#include "stasoc/protocols.hpp"

namespace stasoc {

namespace {

// Composite Simpson on uniformly spaced samples taken every `stride` entries.
double simpson(const std::vector<double>& f, double h, std::size_t stride) {
  const std::size_t intervals = (f.size() - 1) / stride;
  double sum = f.front() + f.back();
  for (std::size_t i = 1; i < intervals; ++i) {
    sum += (i % 2 == 1 ? 4.0 : 2.0) * f[i * stride];
  }
  return sum * h * static_cast<double>(stride) / 3.0;
}

struct Quadrature {
  double value;
  double error;
};

Quadrature simpson_with_estimate(const std::vector<double>& f, double h) {
  if (f.size() < 5 || (f.size() - 1) % 4 != 0) {
    throw std::invalid_argument("spin-phase quadrature needs 4k+1 samples, got " +
                                std::to_string(f.size()));
  }
  const double fine = simpson(f, h, 1);
  const double coarse = simpson(f, h, 2);
  return {fine, std::abs(fine - coarse) / 15.0};
}

template <class Protocol>
double adaptive_phase(const Protocol& p, double tolerance) {
  const double pref = -p.scales().mass / p.scales().hbar;
  for (std::size_t n = 4001; n <= (std::size_t{1} << 24) + 1; n = 2 * (n - 1) + 1) {
    const ControlTrace trace = sample_controls(p, n);
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = trace.soc_auxiliary_rate[i] * trace.trap_position[i];
    const auto q = simpson_with_estimate(f, p.duration() / static_cast<double>(n - 1));
    if (std::abs(pref) * q.error <= tolerance) return pref * q.value;
  }
  throw std::domain_error("spin-phase quadrature did not reach the requested tolerance");
}

}  // namespace

double phase_sigma(const ControlTrace& trace, const PhysicalScales& scales, double tolerance) {
  const std::size_t n = trace.size();
  if (n < 2 || trace.trap_position.size() != n || trace.soc_auxiliary_rate.size() != n) {
    throw std::invalid_argument("inconsistent control trace");
  }
  const double h = (trace.times.back() - trace.times.front()) / static_cast<double>(n - 1);
  std::vector<double> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = trace.soc_auxiliary_rate[i] * trace.trap_position[i];
  const auto q = simpson_with_estimate(f, h);
  const double pref = -scales.mass / scales.hbar;
  if (std::abs(pref) * q.error > tolerance) {
    throw std::domain_error("insufficient samples for spin phase: estimated error " +
                            std::to_string(std::abs(pref) * q.error));
  }
  return pref * q.value;
}

double phase_sigma(const StaProtocol& p, double tolerance) { return adaptive_phase(p, tolerance); }

double phase_sigma(const AdiabaticProtocol& p, double tolerance) {
  return adaptive_phase(p, tolerance);
}

bool ValidationReport::has(const std::string& code) const {
  return std::any_of(warnings.begin(), warnings.end(),
                     [&](const ValidationWarning& w) { return w.code == code; });
}

ValidationReport validate(const StaParameters& p) {
  ValidationReport report;
  const double w = p.scales.omega;
  report.singular_distance = std::abs(5.0 * w * w * p.duration * p.duration - 66.0) / 66.0;
  report.singular = report.singular_distance < kSingularityGuard;
  if (report.singular) {
    report.warnings.push_back(
        {"singular", "t_f = " + std::to_string(p.duration) +
                         " lies within the singular band around sqrt(66/5)/omega = " +
                         std::to_string(std::sqrt(66.0 / 5.0) / w)});
    return report;
  }
  if (!(p.duration > 0.0) || p.distance == 0.0) {
    report.warnings.push_back({"invalid", "STA needs t_f > 0 and d != 0"});
    return report;
  }
  const StaProtocol protocol(p);
  constexpr int kScan = 10001;
  for (int i = 0; i < kScan; ++i) {
    const double t = p.duration * i / (kScan - 1);
    report.peak_soc_strength = std::max(report.peak_soc_strength, std::abs(protocol.soc_strength(t)));
  }
  return report;
}

ValidationReport validate(const AdiabaticParameters& p) {
  ValidationReport report;
  const auto& s = p.scales;
  const double wt = s.omega * p.duration;
  const double r = std::fmod(wt, 2.0 * kPi);
  const double miss = std::min(r, 2.0 * kPi - r);
  report.residual_excitation = miss > 1e-9 * std::max(1.0, wt);
  if (report.residual_excitation) {
    report.warnings.push_back(
        {"residual_excitation", "omega t_f = " + std::to_string(wt) +
                                    " is not a multiple of 2 pi; a_c and its rate do not "
                                    "return to zero and the orbit stays excited"});
  }
  report.adiabatic_time_bound = std::abs(p.distance) * std::sqrt(s.mass / (2.0 * s.hbar * s.omega));
  report.adiabaticity_violated = p.duration <= report.adiabatic_time_bound;
  if (report.adiabaticity_violated) {
    report.warnings.push_back(
        {"adiabaticity", "t_f = " + std::to_string(p.duration) +
                             " does not exceed the adiabatic bound d sqrt(m/(2 hbar omega)) = " +
                             std::to_string(report.adiabatic_time_bound)});
  }
  return report;
}

}  // namespace stasoc
