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

#include "stasoc/observables.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "stasoc/oscillator.hpp"

namespace stasoc {

SpinDensityMatrix density_matrix(const SpinorField& field) {
  double r11 = 0.0, r22 = 0.0;
  cplx r12 = 0.0;
  const auto up = field.up();
  const auto down = field.down();
  for (std::size_t j = 0; j < up.size(); ++j) {
    r11 += std::norm(up[j]);
    r12 += up[j] * std::conj(down[j]);
    r22 += std::norm(down[j]);
  }
  const double dx = field.grid().dx();
  return {r11 * dx, r12 * dx, std::conj(r12) * dx, r22 * dx};
}

SpinExpectations spin_expectations(const SpinDensityMatrix& rho) {
  const cplx i(0.0, 1.0);
  return {(rho.rho12 + rho.rho21).real(), (i * (rho.rho12 - rho.rho21)).real(),
          (rho.rho11 - rho.rho22).real()};
}

double bloch_length(const SpinExpectations& s) {
  return std::sqrt(s.sx * s.sx + s.sy * s.sy + s.sz * s.sz);
}

double center_of_mass(const SpinorField& field) {
  const auto x = field.grid().x();
  double weighted = 0.0, total = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double rho = std::norm(field.up()[j]) + std::norm(field.down()[j]);
    weighted += x[j] * rho;
    total += rho;
  }
  return weighted / total;
}

double momentum_expectation(const SpinorField& field, const FourierTransform& fft,
                            const PhysicalScales& scales) {
  const auto k = field.grid().k();
  double weighted = 0.0, total = 0.0;
  std::vector<cplx> buffer(field.size());
  for (int sign : {+1, -1}) {
    const auto comp = field.component(sign);
    std::copy(comp.begin(), comp.end(), buffer.begin());
    fft.forward(buffer);
    for (std::size_t j = 0; j < buffer.size(); ++j) {
      const double w = std::norm(buffer[j]);
      weighted += k[j] * w;
      total += w;
    }
  }
  return scales.hbar * weighted / total;
}

double momentum_expectation(const SpinorField& field, const PhysicalScales& scales) {
  return momentum_expectation(field, FourierTransform(field.size()), scales);
}

double velocity_expectation(const SpinorField& field, double soc_strength,
                            const PhysicalScales& scales) {
  const double sz = spin_expectations(density_matrix(field)).sz;
  return momentum_expectation(field, scales) / scales.mass + soc_strength * sz;
}

double fidelity(const SpinorField& field, const SpinorField& target) {
  return std::norm(inner_product(target, field));
}

double infidelity(const SpinorField& field, const SpinorField& target) {
  const double tn = norm(target);
  const double fn = norm(field);
  const double tt = tn * tn;
  const double ff = fn * fn;
  const cplx overlap = inner_product(target, field) / tt;
  double residual = 0.0;
  for (int sign : {+1, -1}) {
    const auto f = field.component(sign);
    const auto t = target.component(sign);
    for (std::size_t j = 0; j < f.size(); ++j) residual += std::norm(f[j] - overlap * t[j]);
  }
  return residual * field.grid().dx() / ff;
}

SpinorField make_target(double distance, int spin_sign, GridPtr grid,
                        const PhysicalScales& scales) {
  const auto orbital = harmonic_eigenstate(0, scales, *grid, distance);
  return SpinorField::product(std::move(grid), Spinor::sigma_x(spin_sign), orbital);
}

DensityProfiles density_profiles(const SpinorField& field) {
  DensityProfiles p;
  p.total.resize(field.size());
  p.up.resize(field.size());
  p.down.resize(field.size());
  for (std::size_t j = 0; j < field.size(); ++j) {
    p.up[j] = std::norm(field.up()[j]);
    p.down[j] = std::norm(field.down()[j]);
    p.total[j] = p.up[j] + p.down[j];
  }
  return p;
}

ObservableRecord measure(const SpinorField& field, double t, double soc_strength,
                         const FourierTransform& fft, const PhysicalScales& scales) {
  const auto s = spin_expectations(density_matrix(field));
  ObservableRecord r;
  r.t = t;
  r.com = center_of_mass(field);
  r.mom = momentum_expectation(field, fft, scales);
  r.vel = r.mom / scales.mass + soc_strength * s.sz;
  r.sx = s.sx;
  r.sy = s.sy;
  r.sz = s.sz;
  r.bloch = bloch_length(s);
  r.norm = norm(field);
  return r;
}

std::optional<double> precession_crossing_time(const std::vector<ObservableRecord>& records,
                                               double period, double angle) {
  if (records.size() < 2 || !(period > 0.0)) return std::nullopt;
  std::size_t i = 0;
  double previous = 0.0;
  bool have_previous = false;
  for (std::size_t k = 0;; ++k) {
    const double tk = period * static_cast<double>(k);
    if (tk > records.back().t) return std::nullopt;
    while (i + 2 < records.size() && records[i + 1].t < tk) ++i;
    const auto& a = records[i];
    const auto& b = records[i + 1];
    const double f = b.t > a.t ? std::clamp((tk - a.t) / (b.t - a.t), 0.0, 1.0) : 0.0;
    const double sx = a.sx + f * (b.sx - a.sx);
    const double sy = a.sy + f * (b.sy - a.sy);
    double theta = std::atan2(sy, sx);
    if (have_previous) {
      while (theta - previous > kPi) theta -= 2.0 * kPi;
      while (theta - previous < -kPi) theta += 2.0 * kPi;
    }
    if (have_previous && std::abs(theta) >= angle) {
      const double lo = std::abs(previous);
      const double frac = (angle - lo) / (std::abs(theta) - lo);
      return tk - period + frac * period;
    }
    previous = theta;
    have_previous = true;
  }
}

}  // namespace stasoc
