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

#include <cmath>
#include <stdexcept>

namespace stasoc {

/// Dimensionless physical scales. With m = omega = hbar = 1 the time unit is
/// 1/omega and the length unit is the oscillator length sqrt(hbar/(m omega)).
struct PhysicalScales {
  double mass = 1.0;
  double omega = 1.0;
  double hbar = 1.0;

  void validate() const {
    if (!(mass > 0.0) || !(omega > 0.0) || !(hbar > 0.0)) {
      throw std::invalid_argument("physical scales must be positive");
    }
  }

  double oscillator_length() const { return std::sqrt(hbar / (mass * omega)); }
};

// Laboratory values of the dimensionless units for 87Rb in a 2*pi x 250 Hz trap.
inline constexpr double kTimeUnitMilliseconds = 0.637;
inline constexpr double kLengthUnitMicrometres = 0.682;

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace stasoc
