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

#include <vector>

#include "stasoc/grid.hpp"
#include "stasoc/scales.hpp"

namespace stasoc {

/// E_n = (n + 1/2) hbar omega.
double oscillator_energy(int n, const PhysicalScales& scales);

/// Unit-norm Hermite-Gaussian psi_n(x - center) of the static trap, sampled on
/// the grid nodes. Throws when the tail at either boundary exceeds 1e-12.
std::vector<double> harmonic_eigenstate(int n, const PhysicalScales& scales,
                                        const SimulationGrid& grid,
                                        double center = 0.0);

}  // namespace stasoc
