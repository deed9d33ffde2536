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

#include <optional>
#include <vector>

#include "stasoc/fourier.hpp"
#include "stasoc/scales.hpp"
#include "stasoc/spinor_field.hpp"

namespace stasoc {

/// Reduced spin density matrix rho_ij = int Psi_i conj(Psi_j) dx.
struct SpinDensityMatrix {
  cplx rho11;
  cplx rho12;
  cplx rho21;
  cplx rho22;

  double trace() const { return (rho11 + rho22).real(); }
};

struct SpinExpectations {
  double sx = 0.0;
  double sy = 0.0;
  double sz = 0.0;
};

struct ObservableRecord {
  double t = 0.0;
  double com = 0.0;
  double mom = 0.0;
  double vel = 0.0;
  double sx = 0.0;
  double sy = 0.0;
  double sz = 0.0;
  double bloch = 0.0;
  double norm = 0.0;
};

struct DensityProfiles {
  std::vector<double> total;
  std::vector<double> up;
  std::vector<double> down;
};

SpinDensityMatrix density_matrix(const SpinorField& field);

/// <sigma_i> = tr(sigma_i rho).
SpinExpectations spin_expectations(const SpinDensityMatrix& rho);
double bloch_length(const SpinExpectations& s);

double center_of_mass(const SpinorField& field);
/// <p> evaluated in wavenumber space.
double momentum_expectation(const SpinorField& field, const FourierTransform& fft,
                            const PhysicalScales& scales);
double momentum_expectation(const SpinorField& field, const PhysicalScales& scales);
/// <v> = <p>/m + alpha <sigma_z>.
double velocity_expectation(const SpinorField& field, double soc_strength,
                            const PhysicalScales& scales);

/// |<target|field>|^2.
double fidelity(const SpinorField& field, const SpinorField& target);

/// 1 - |<target|field>|^2 / (|target|^2 |field|^2), evaluated as the squared
/// norm of the part of `field` orthogonal to `target` so that it stays
/// accurate far below the double-precision resolution of 1 - F.
double infidelity(const SpinorField& field, const SpinorField& target);

/// (1, spin_sign)/sqrt(2) (x) psi_0(x - d).
SpinorField make_target(double distance, int spin_sign, GridPtr grid,
                        const PhysicalScales& scales = {});

DensityProfiles density_profiles(const SpinorField& field);

/// All per-sample observables at once; alpha is the SOC strength at t.
ObservableRecord measure(const SpinorField& field, double t, double soc_strength,
                         const FourierTransform& fft, const PhysicalScales& scales);

/// Time at which the Bloch-vector azimuth atan2(sy, sx), unwrapped and read
/// stroboscopically at multiples of `period`, first reaches `angle` in
/// magnitude. Samples are linearly interpolated onto the stroboscopic
/// instants and the crossing is interpolated between consecutive ones.
std::optional<double> precession_crossing_time(const std::vector<ObservableRecord>& records,
                                               double period, double angle);

}  // namespace stasoc
