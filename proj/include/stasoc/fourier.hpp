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

#include <complex>
#include <cstddef>
#include <memory>
#include <span>

namespace stasoc {

class SimulationGrid;

/// In-place 1D complex FFT of fixed length backed by FFTW.
///
/// Plans are built with FFTW_ESTIMATE so the chosen algorithm, and therefore
/// every output bit, is independent of timing. Planning is serialised; plan
/// execution is reentrant, so one instance may be shared across threads.
/// The forward transform is unnormalised and the inverse divides by n.
class FourierTransform {
 public:
  explicit FourierTransform(std::size_t n);

  std::size_t size() const { return n_; }
  void forward(std::span<std::complex<double>> data) const;
  void inverse(std::span<std::complex<double>> data) const;

 private:
  struct Plans;
  std::size_t n_;
  std::shared_ptr<const Plans> plans_;
};

/// Shifts a periodic band-limited signal by `shift` (f(x) -> f(x - shift))
/// through a phase ramp in wavenumber space.
void spectral_translate(std::span<std::complex<double>> data, double shift,
                        const SimulationGrid& grid, const FourierTransform& fft);

}  // namespace stasoc
