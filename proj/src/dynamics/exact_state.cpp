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
#include <stdexcept>
#include <string>

#include "stasoc/dynamics.hpp"
#include "stasoc/fourier.hpp"
#include "stasoc/oscillator.hpp"

namespace stasoc {

namespace {

constexpr double kEdgeClearanceWidths = 5.0;

void require_clearance(double center, double width, const SimulationGrid& grid) {
  const double lo = center - kEdgeClearanceWidths * width;
  const double hi = center + kEdgeClearanceWidths * width;
  if (lo < grid.x_min() || hi > grid.x_max()) {
    throw std::domain_error("exact state centred at " + std::to_string(center) +
                            " comes within 5 widths of the grid edge");
  }
}

}  // namespace

SpinorField exact_state(const AuxiliaryTrace& trace, double t, int n, Spinor chi, GridPtr grid) {
  const std::size_t i = trace.index_of(t);
  const auto& s = trace.scales;
  const SimulationGrid& g = *grid;
  const double w2 = s.omega * s.omega;
  const double xc = trace.center_of_mass[i];
  const double xc_rate = trace.center_of_mass_rate[i];
  const double ac = trace.soc_auxiliary[i];
  const double spin_shift = trace.soc_auxiliary_rate[i] / w2;

  const double width = s.oscillator_length() * std::sqrt(2.0 * n + 1.0);
  require_clearance(xc + spin_shift, width, g);
  require_clearance(xc - spin_shift, width, g);

  const std::vector<double> psi = harmonic_eigenstate(n, s, g);
  const auto x = g.x();
  const FourierTransform fft(g.size());

  // Orbital part: momentum kick, translation to x_c, trap phase.
  std::vector<cplx> orbit(g.size());
  for (std::size_t j = 0; j < orbit.size(); ++j) {
    orbit[j] = psi[j] * std::polar(1.0, s.mass * xc_rate * x[j] / s.hbar);
  }
  spectral_translate(orbit, xc, g, fft);
  const cplx trap_phase = std::polar(1.0, -trace.phase_trap[i]);
  for (auto& v : orbit) v *= trap_phase;

  SpinorField field(grid);
  const cplx common = std::polar(1.0, -trace.phase_alpha[i]) *
                      std::polar(1.0, -oscillator_energy(n, s) * t / s.hbar);
  for (int sign : {+1, -1}) {
    auto comp = field.component(sign);
    std::copy(orbit.begin(), orbit.end(), comp.begin());
    spectral_translate(comp, sign * spin_shift, g, fft);
    const cplx spinor = sign > 0 ? chi.up : chi.down;
    const cplx spin_phase = std::polar(1.0, -sign * trace.phase_spin[i]) * common * spinor;
    for (std::size_t j = 0; j < comp.size(); ++j) {
      comp[j] *= std::polar(1.0, -sign * s.mass * ac * x[j] / s.hbar) * spin_phase;
    }
  }
  return field;
}

}  // namespace stasoc
