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

#include <gtest/gtest.h>

#include <cmath>

#include "stasoc/protocols.hpp"

namespace stasoc {
namespace {

// Second derivative by five-point central differences.
template <class F>
double second_derivative(F f, double t, double h) {
  return (-f(t + 2 * h) + 16 * f(t + h) - 30 * f(t) + 16 * f(t - h) - f(t - 2 * h)) / (12 * h * h);
}

template <class F>
double first_derivative(F f, double t, double h) {
  return (-f(t + 2 * h) + 8 * f(t + h) - 8 * f(t - h) + f(t - 2 * h)) / (12 * h);
}

TEST(StaProtocol, BoundaryConditions) {
  const StaProtocol p({});
  const Jet x0 = p.center_of_mass(0.0), x1 = p.center_of_mass(8.0);
  const Jet a0 = p.soc_auxiliary(0.0), a1 = p.soc_auxiliary(8.0);
  for (double v : {x0.value, x0.rate, x0.acceleration, x1.rate, x1.acceleration, a0.value, a0.rate,
                   a0.acceleration, a1.value, a1.rate, a1.acceleration}) {
    EXPECT_NEAR(v, 0.0, 1e-12);
  }
  EXPECT_NEAR(x1.value, 10.0, 1e-12);
  EXPECT_NEAR(p.trap_position(0.0), 0.0, 1e-12);
  EXPECT_NEAR(p.trap_position(8.0), 10.0, 1e-12);
  EXPECT_NEAR(p.soc_strength(0.0), 0.0, 1e-12);
  EXPECT_NEAR(p.soc_strength(8.0), 0.0, 1e-12);
}

TEST(StaProtocol, KnownValues) {
  const StaProtocol p({});
  EXPECT_DOUBLE_EQ(p.center_of_mass(2.0).value, 1.03515625);
  EXPECT_NEAR(p.center_of_mass(4.0).value, 5.0, 1e-14);
  EXPECT_NEAR(p.trap_position(4.0), 5.0, 1e-12);
  // Amplitude -231 pi (hbar/(m d)) w^2 t_f^2 / (5 w^2 t_f^2 - 66) = -231 pi 6.4 / 254.
  EXPECT_NEAR(p.soc_amplitude(), -231.0 * kPi * 6.4 / 254.0, 1e-12);
  EXPECT_NEAR(p.soc_amplitude(), -18.2856, 1e-4);
  EXPECT_NEAR(p.soc_auxiliary(4.0).value, 18.2856 / 64.0, 1e-5);
}

TEST(StaProtocol, MidpointSocStrengthAgainstFiniteDifferences) {
  // Independent oracle: take the auxiliary value only and differentiate numerically.
  const StaProtocol p({});
  auto a = [&](double t) { return p.soc_auxiliary(t).value; };
  const double t = 4.0;
  const double alpha_fd = a(t) + second_derivative(a, t, 1e-3);
  EXPECT_NEAR(p.soc_strength(t), alpha_fd, 1e-8);
  EXPECT_NEAR(p.soc_strength(t), 0.178570, 1e-6);
}

TEST(StaProtocol, JetsMatchFiniteDifferences) {
  const StaProtocol p({10.0, 8.0, {}});
  auto xc = [&](double t) { return p.center_of_mass(t).value; };
  auto ac = [&](double t) { return p.soc_auxiliary(t).value; };
  for (double t = 0.5; t < 7.6; t += 0.37) {
    EXPECT_NEAR(p.center_of_mass(t).rate, first_derivative(xc, t, 1e-3), 1e-8);
    EXPECT_NEAR(p.center_of_mass(t).acceleration, second_derivative(xc, t, 1e-3), 1e-6);
    EXPECT_NEAR(p.soc_auxiliary(t).rate, first_derivative(ac, t, 1e-3), 1e-8);
    EXPECT_NEAR(p.soc_auxiliary(t).acceleration, second_derivative(ac, t, 1e-3), 1e-6);
  }
}

TEST(StaProtocol, AuxiliaryEquationResiduals) {
  const StaParameters params{10.0, 8.0, {1.3, 0.8, 1.0}};
  const StaProtocol p(params);
  const double w2 = params.scales.omega * params.scales.omega;
  double rx = 0.0, ra = 0.0;
  for (int i = 0; i <= 10000; ++i) {
    const double t = 8.0 * i / 10000.0;
    const Jet x = p.center_of_mass(t), a = p.soc_auxiliary(t);
    rx = std::max(rx, std::abs(x.acceleration + w2 * (x.value - p.trap_position(t))));
    ra = std::max(ra, std::abs(a.acceleration + w2 * (a.value - p.soc_strength(t))));
  }
  EXPECT_LT(rx, 1e-10);
  EXPECT_LT(ra, 1e-10);
}

TEST(StaProtocol, MirrorSymmetry) {
  const StaProtocol p({});
  for (double t = 0.0; t <= 4.0; t += 0.25) {
    EXPECT_NEAR(p.center_of_mass(t).value + p.center_of_mass(8.0 - t).value, 10.0, 1e-12);
    EXPECT_NEAR(p.soc_auxiliary(t).value, p.soc_auxiliary(8.0 - t).value, 1e-12);
    EXPECT_NEAR(p.soc_strength(t), p.soc_strength(8.0 - t), 1e-12);
    EXPECT_NEAR(p.trap_position(t) + p.trap_position(8.0 - t), 10.0, 1e-12);
  }
}

TEST(StaProtocol, RejectsBadDesigns) {
  EXPECT_THROW(StaProtocol({10.0, std::sqrt(66.0 / 5.0), {}}), std::invalid_argument);
  EXPECT_THROW(StaProtocol({10.0, 3.6332, {}}), std::invalid_argument);
  EXPECT_THROW(StaProtocol({0.0, 8.0, {}}), std::invalid_argument);
  EXPECT_THROW(StaProtocol({10.0, -1.0, {}}), std::invalid_argument);
  const StaProtocol p({});
  EXPECT_THROW(p.controls(-0.1), std::domain_error);
  EXPECT_THROW(p.controls(8.1), std::domain_error);
}

TEST(StaProtocol, SpinPhaseIsQuarterTurnAcrossDesigns) {
  for (double d : {5.0, 10.0, -3.0}) {
    for (double tf : {2.0, 8.0, 20.0}) {
      const StaProtocol p({d, tf, {}});
      EXPECT_NEAR(phase_sigma(p), kPi / 2.0, 1e-8) << "d=" << d << " tf=" << tf;
    }
  }
  for (double omega : {0.5, 2.0}) {
    for (double mass : {0.7, 3.0}) {
      const StaProtocol p({10.0, 8.0, {mass, omega, 1.0}});
      EXPECT_NEAR(phase_sigma(p), kPi / 2.0, 1e-8) << "omega=" << omega << " m=" << mass;
    }
  }
}

TEST(StaProtocol, SocScalesInverselyWithDistance) {
  const StaProtocol a({5.0, 8.0, {}}), b({20.0, 8.0, {}});
  for (double t = 0.5; t < 8.0; t += 1.5) EXPECT_NEAR(a.soc_strength(t), 4.0 * b.soc_strength(t), 1e-12);
}

TEST(StaProtocol, SampledTraceQuadrature) {
  const StaProtocol p({});
  const auto trace = sample_controls(p, 4001);
  ASSERT_EQ(trace.size(), 4001u);
  EXPECT_DOUBLE_EQ(trace.times.front(), 0.0);
  EXPECT_DOUBLE_EQ(trace.times.back(), 8.0);
  EXPECT_NEAR(phase_sigma(trace, p.scales()), kPi / 2.0, 1e-8);
  EXPECT_THROW(phase_sigma(sample_controls(p, 4000), p.scales()), std::invalid_argument);
  EXPECT_THROW(phase_sigma(sample_controls(p, 9), p.scales(), 1e-12), std::domain_error);
}

TEST(AdiabaticProtocol, ControlsAndCentre) {
  const AdiabaticProtocol p({});
  EXPECT_DOUBLE_EQ(p.trap_position(0.0), 0.0);
  EXPECT_NEAR(p.trap_position(p.duration()), 10.0, 1e-12);
  EXPECT_NEAR(p.soc_auxiliary(kPi).value, 2.0, 1e-12);
  EXPECT_NEAR(p.soc_auxiliary(p.duration()).value, 0.0, 1e-12);
  EXPECT_NEAR(p.soc_auxiliary(p.duration()).rate, 0.0, 1e-12);
  EXPECT_NEAR(p.center_of_mass(p.duration()).value, 10.0, 1e-12);
  EXPECT_NEAR(p.center_of_mass(p.duration()).rate, 0.0, 1e-12);
  EXPECT_DOUBLE_EQ(p.soc_strength(17.0), 1.0);
  for (double t = 0.3; t < 300.0; t += 29.1) {
    const Jet x = p.center_of_mass(t), a = p.soc_auxiliary(t);
    EXPECT_NEAR(x.acceleration + (x.value - p.trap_position(t)), 0.0, 1e-10);
    EXPECT_NEAR(a.acceleration + (a.value - p.soc_strength(t)), 0.0, 1e-10);
  }
}

TEST(AdiabaticProtocol, SpinPhase) {
  // At w t_f = 2 pi k the phase reduces to m alpha d / hbar.
  for (double d : {10.0, 3.0}) {
    for (double alpha : {1.0, 0.25}) {
      const AdiabaticProtocol p({alpha, d, 100.0 * kPi, {}});
      EXPECT_NEAR(phase_sigma(p), alpha * d, 1e-8);
      EXPECT_NEAR(p.closed_form_spin_phase(), alpha * d, 1e-10);
    }
  }
  const AdiabaticProtocol q({1.0, 10.0, 37.3, {}});
  EXPECT_NEAR(phase_sigma(q), q.closed_form_spin_phase(), 1e-8);
  const AdiabaticProtocol none({0.0, 10.0, 100.0 * kPi, {}});
  EXPECT_NEAR(phase_sigma(none), 0.0, 1e-14);
}

TEST(SpinFlip, LengthAndTime) {
  EXPECT_NEAR(spin_flip_length(1.0, {}), kPi / 2.0, 1e-15);
  EXPECT_NEAR(spin_flip_length(2.0, {}), kPi / 4.0, 1e-15);
  EXPECT_NEAR(spin_flip_length(1.0, {2.0, 1.0, 1.0}), kPi / 4.0, 1e-15);
  const AdiabaticProtocol p({});
  EXPECT_NEAR(spin_flip_time(p) / p.duration(), 0.157, 1e-3);
  EXPECT_NEAR(spin_flip_time(p) / p.duration(), kPi / 20.0, 1e-12);
  EXPECT_THROW(spin_flip_length(0.0, {}), std::invalid_argument);
}

TEST(Validate, StaDesigns) {
  const auto good = validate(StaParameters{});
  EXPECT_TRUE(good.ok());
  EXPECT_NEAR(good.peak_soc_strength, 0.178570, 1e-5);
  const auto bad = validate(StaParameters{10.0, 3.6332, {}});
  EXPECT_TRUE(bad.singular);
  EXPECT_TRUE(bad.has("singular"));
  EXPECT_LT(std::abs(bad.singular_distance), 1e-3 * 66.0);
  EXPECT_TRUE(validate(StaParameters{0.0, 8.0, {}}).has("invalid"));
}

TEST(Validate, AdiabaticDesigns) {
  const auto good = validate(AdiabaticParameters{});
  EXPECT_TRUE(good.ok());
  EXPECT_NEAR(good.adiabatic_time_bound, 10.0 / std::sqrt(2.0), 1e-12);
  const auto fast = validate(AdiabaticParameters{1.0, 10.0, 5.0, {}});
  EXPECT_TRUE(fast.adiabaticity_violated);
  EXPECT_TRUE(fast.has("adiabaticity"));
  const auto off = validate(AdiabaticParameters{1.0, 10.0, 100.0 * kPi + 0.5, {}});
  EXPECT_TRUE(off.residual_excitation);
  EXPECT_FALSE(off.adiabaticity_violated);
}

TEST(ControlSchedule, ReversalAndClamping) {
  const StaProtocol p({});
  const auto s = ControlSchedule::from(p);
  const auto r = s.reversed();
  EXPECT_DOUBLE_EQ(r.duration(), 8.0);
  for (double t = 0.0; t <= 8.0; t += 0.5) {
    EXPECT_DOUBLE_EQ(r.at(t).trap_position, s.at(8.0 - t).trap_position);
    EXPECT_DOUBLE_EQ(r.at(t).soc_strength, s.at(8.0 - t).soc_strength);
  }
  EXPECT_NEAR(s.at(8.0 + 1e-15).trap_position, 10.0, 1e-12);
  const auto idle = ControlSchedule::idle(3.0);
  EXPECT_EQ(idle.at(1.0).trap_position, 0.0);
  EXPECT_EQ(idle.at(1.0).soc_strength, 0.0);
}

}  // namespace
}  // namespace stasoc
