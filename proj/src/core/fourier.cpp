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

#include "stasoc/fourier.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>
#include <vector>

#include "stasoc/grid.hpp"

namespace stasoc {

namespace {

// The FFTW planner is not thread safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

struct FourierTransform::Plans {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;

  explicit Plans(std::size_t n) {
    std::vector<std::complex<double>> scratch(n);
    auto* p = reinterpret_cast<fftw_complex*>(scratch.data());
    const int len = static_cast<int>(n);
    std::lock_guard lock(planner_mutex());
    forward = fftw_plan_dft_1d(len, p, p, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    backward = fftw_plan_dft_1d(len, p, p, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (forward == nullptr || backward == nullptr) {
      throw std::runtime_error("FFTW planning failed");
    }
  }
  ~Plans() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
  }
  Plans(const Plans&) = delete;
  Plans& operator=(const Plans&) = delete;
};

FourierTransform::FourierTransform(std::size_t n) : n_(n), plans_(std::make_shared<Plans>(n)) {}

void FourierTransform::forward(std::span<std::complex<double>> data) const {
  if (data.size() != n_) throw std::invalid_argument("FFT length mismatch");
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plans_->forward, p, p);
}

void FourierTransform::inverse(std::span<std::complex<double>> data) const {
  if (data.size() != n_) throw std::invalid_argument("FFT length mismatch");
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plans_->backward, p, p);
  const double scale = 1.0 / static_cast<double>(n_);
  for (auto& v : data) v *= scale;
}

void spectral_translate(std::span<std::complex<double>> data, double shift,
                        const SimulationGrid& grid, const FourierTransform& fft) {
  if (shift == 0.0) return;
  fft.forward(data);
  const auto k = grid.k();
  for (std::size_t j = 0; j < data.size(); ++j) {
    data[j] *= std::polar(1.0, -k[j] * shift);
  }
  fft.inverse(data);
}

}  // namespace stasoc
