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

#include "stasoc/dynamics.hpp"
#include "stasoc/observables.hpp"
#include "stasoc/oscillator.hpp"
#include "test_support.hpp"

namespace stasoc {
namespace {

// Composite Simpson over [0, T] with n (even) panels.
template <class F>
double simpson(F f, double T, int n) {
  const double h = T / n;
  double s = f(0.0) + f(T);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return s * h / 3.0;
}

TEST(Auxiliary, StaTrajectoriesMatchClosedForms) {
  const StaProtocol p({});
  const auto trace = integrate_auxiliary(ControlSchedule::from(p), p.scales(), 8001);
  ASSERT_EQ(trace.size(), 8001u);
  double ex = 0.0, ea = 0.0;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const double t = trace.times[i];
    ex = std::max(ex, std::abs(trace.center_of_mass[i] - p.center_of_mass(t).value));
    ex = std::max(ex, std::abs(trace.center_of_mass_rate[i] - p.center_of_mass(t).rate));
    ea = std::max(ea, std::abs(trace.soc_auxiliary[i] - p.soc_auxiliary(t).value));
    ea = std::max(ea, std::abs(trace.soc_auxiliary_rate[i] - p.soc_auxiliary(t).rate));
  }
  EXPECT_LT(ex, 1e-8);
  EXPECT_LT(ea, 1e-8);
  EXPECT_NEAR(trace.center_of_mass.back(), 10.0, 1e-8);
  EXPECT_NEAR(trace.phase_spin.back(), phase_sigma(p), 1e-8);
}

TEST(Auxiliary, StaPhasesMatchQuadrature) {
  const StaProtocol p({});
  const auto trace = integrate_auxiliary(ControlSchedule::from(p), p.scales(), 8001);
  auto l_alpha = [&](double t) {
    const Jet a = p.soc_auxiliary(t);
    return 0.5 * a.rate * a.rate - 0.5 * a.value * a.value + a.value * p.soc_strength(t);
  };
  auto l_trap = [&](double t) {
    const Jet x = p.center_of_mass(t);
    const double d = x.value - p.trap_position(t);
    return 0.5 * x.rate * x.rate - 0.5 * d * d;
  };
  EXPECT_NEAR(trace.phase_alpha.back(), -simpson(l_alpha, 8.0, 20000), 1e-8);
  EXPECT_NEAR(trace.phase_trap.back(), -simpson(l_trap, 8.0, 20000), 1e-8);
}

TEST(Auxiliary, AdiabaticCentreOfMass) {
  const AdiabaticProtocol p({1.0, 10.0, 20.0 * kPi, {}});
  const auto trace = integrate_auxiliary(ControlSchedule::from(p), p.scales(), 20001);
  for (std::size_t i = 0; i < trace.size(); i += 997) {
    const double t = trace.times[i];
    EXPECT_NEAR(trace.center_of_mass[i], p.center_of_mass(t).value, 1e-8);
    EXPECT_NEAR(trace.soc_auxiliary[i], 1.0 - std::cos(t), 1e-8);
  }
  EXPECT_NEAR(trace.phase_spin.back(), p.closed_form_spin_phase(), 1e-8);
}

TEST(Auxiliary, FourthOrderConvergence) {
  const StaProtocol p({});
  const auto coarse = integrate_auxiliary(ControlSchedule::from(p), p.scales(), 101, {1.0});
  const auto fine = integrate_auxiliary(ControlSchedule::from(p), p.scales(), 201, {1.0});
  double ec = 0.0, ef = 0.0;
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    ec = std::max(ec, std::abs(coarse.soc_auxiliary[i] - p.soc_auxiliary(coarse.times[i]).value));
    ef = std::max(ef, std::abs(fine.soc_auxiliary[2 * i] - p.soc_auxiliary(coarse.times[i]).value));
  }
  const double order = std::log2(ec / ef);
  EXPECT_GT(order, 3.7);
  EXPECT_LT(order, 4.3);
}

TEST(Auxiliary, TrivialControlsStayAtRest) {
  const auto trace = integrate_auxiliary(ControlSchedule::idle(5.0), {}, 101);
  for (std::size_t i = 0; i < trace.size(); ++i) {
    for (double v : {trace.center_of_mass[i], trace.center_of_mass_rate[i], trace.soc_auxiliary[i],
                     trace.soc_auxiliary_rate[i], trace.phase_alpha[i], trace.phase_trap[i],
                     trace.phase_spin[i]}) {
      EXPECT_EQ(v, 0.0);
    }
  }
}

TEST(Auxiliary, Errors) {
  const StaProtocol p({});
  const auto schedule = ControlSchedule::from(p);
  EXPECT_THROW(integrate_auxiliary(schedule, p.scales(), 1), std::invalid_argument);
  EXPECT_THROW(integrate_auxiliary(schedule, p.scales(), 11, {1e-12}), std::domain_error);
  const ControlSchedule broken([](double t) -> ControlPoint {
    if (t > 1.0) throw std::domain_error("outside");
    return {};
  }, 2.0);
  EXPECT_THROW(integrate_auxiliary(broken, {}, 101), std::runtime_error);
  const auto trace = integrate_auxiliary(schedule, p.scales(), 8001);
  EXPECT_EQ(trace.index_of(4.0), 4000u);
  EXPECT_THROW(trace.index_of(4.0005), std::domain_error);
}

class ExactStateTest : public ::testing::Test {
 protected:
  void SetUp() override {
    grid_ = testing::default_grid(1e-3, 8.0);
    trace_ = integrate_auxiliary(ControlSchedule::from(protocol_), protocol_.scales(), 8001);
  }
  StaProtocol protocol_{StaParameters{}};
  GridPtr grid_;
  AuxiliaryTrace trace_;
};

TEST_F(ExactStateTest, StartsInInitialState) {
  const auto psi = exact_state(trace_, 0.0, 0, Spinor::spin_up(), grid_);
  const auto expected = SpinorField::product(grid_, Spinor::spin_up(), harmonic_eigenstate(0, {}, *grid_));
  EXPECT_LT(max_abs_difference(psi, expected), 1e-13);
}

TEST_F(ExactStateTest, EndsInFlippedDisplacedGroundState) {
  const auto psi = exact_state(trace_, 8.0, 0, Spinor::sigma_x(+1), grid_);
  EXPECT_GT(fidelity(psi, make_target(10.0, -1, grid_)), 1.0 - 1e-9);
  EXPECT_NEAR(norm(psi), 1.0, 1e-12);
}

TEST_F(ExactStateTest, NormIsConservedAtAllTimes) {
  for (double t : {0.8, 2.0, 3.3, 5.1, 7.0}) {
    EXPECT_NEAR(norm(exact_state(trace_, t, 0, Spinor::sigma_x(+1), grid_)), 1.0, 1e-12) << t;
    EXPECT_NEAR(norm(exact_state(trace_, t, 2, Spinor::spin_down(), grid_)), 1.0, 1e-12) << t;
  }
}

TEST_F(ExactStateTest, SpinComponentsSeparateByAuxiliaryRate) {
  const double t = 2.0;
  const auto psi = exact_state(trace_, t, 0, Spinor::sigma_x(+1), grid_);
  const SpinorField up(grid_, {psi.up().begin(), psi.up().end()}, std::vector<cplx>(grid_->size()));
  const SpinorField down(grid_, std::vector<cplx>(grid_->size()), {psi.down().begin(), psi.down().end()});
  const double rate = trace_.soc_auxiliary_rate[trace_.index_of(t)];
  ASSERT_GT(rate, 0.0);
  EXPECT_NEAR(center_of_mass(up) - center_of_mass(down), 2.0 * rate, 1e-10);
  EXPECT_NEAR(0.5 * (center_of_mass(up) + center_of_mass(down)), protocol_.center_of_mass(t).value, 1e-8);
}

TEST_F(ExactStateTest, SatisfiesSchrodingerEquation) {
  const double h = 1e-4;
  const auto fine = integrate_auxiliary(ControlSchedule::from(protocol_), protocol_.scales(), 80001);
  for (double t : {1.0, 2.5, 4.0, 6.3}) {
    for (int n : {0, 1}) {
      const auto plus = exact_state(fine, t + h, n, Spinor::sigma_x(+1), grid_);
      const auto minus = exact_state(fine, t - h, n, Spinor::sigma_x(+1), grid_);
      const auto mid = exact_state(fine, t, n, Spinor::sigma_x(+1), grid_);
      const auto c = protocol_.controls(t);
      const auto hpsi = testing::apply_hamiltonian(mid, c.trap_position, c.soc_strength, {});
      double residual = 0.0;
      for (int sign : {+1, -1}) {
        for (std::size_t j = 0; j < grid_->size(); ++j) {
          const cplx dpsi = (plus.component(sign)[j] - minus.component(sign)[j]) / (2.0 * h);
          residual += std::norm(cplx(0.0, 1.0) * dpsi - hpsi.component(sign)[j]);
        }
      }
      EXPECT_LT(std::sqrt(residual * grid_->dx()), 1e-4) << "t=" << t << " n=" << n;
    }
  }
}

TEST_F(ExactStateTest, Errors) {
  EXPECT_THROW(exact_state(trace_, 4.00005, 0, Spinor::spin_up(), grid_), std::domain_error);
  const auto narrow = std::make_shared<const SimulationGrid>(SimulationGrid::build(-8.0, 12.0, 512, 1e-3, 8.0));
  EXPECT_THROW(exact_state(trace_, 8.0, 0, Spinor::spin_up(), narrow), std::domain_error);
  EXPECT_THROW(exact_state(trace_, 4.0, -1, Spinor::spin_up(), grid_), std::invalid_argument);
}

}  // namespace
}  // namespace stasoc
