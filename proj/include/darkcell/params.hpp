// Copyright 2026 the darkcell authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DARKCELL_PARAMS_HPP
#define DARKCELL_PARAMS_HPP

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "darkcell/errors.hpp"

namespace darkcell {

// All rates are expressed in units of the excited-state width (Gamma = 1)
// and lengths as k*L with k = 1, so velocities carry units Gamma/k.
struct PhysicalParams {
  double rabi = 0.01;            // Omega, full Rabi frequency
  double branching = 0.7;        // alpha in [0,1]; 1 = closed system
  double ground_relax = 0.0;     // gamma, ground-state decoherence rate
  std::optional<double> feed;    // lambda; defaults to gamma/2 when unset
  double raman_detuning = 0.0;   // delta
  double laser_detuning = 0.0;   // delta_omega
  double cell_length = 100.0;    // k*L
  double doppler_width = 50.0;   // Delta_D = k*u (1/e half-width of W)

  double lambda_value() const {
    return feed ? *feed : 0.5 * ground_relax;
  }

  // Throws InvalidParams on hard violations; returns soft warnings
  // (e.g. rabi above the weak-field regime this model targets).
  std::vector<std::string> validate() const;
};

struct DerivedParams {
  double pump_rate;    // gamma_p = Omega^2 / Gamma
  double phi;          // Omega^2 kL / Gamma^2
  double char_length;  // kL_o = Gamma^2 / Omega^2
  double sat_rabi_sq;  // Omega_o^2 = Gamma^2 / kL
};

DerivedParams derived_params(const PhysicalParams& p);

// Real 9-component state vector, ordered
//   (s_DD, s_CC, s_ee, Re s_eD, Im s_eD, Re s_eC, Im s_eC, Re s_DC, Im s_DC).
using DensityVector = Eigen::Matrix<double, 9, 1>;

namespace density {

enum Index {
  kPopD = 0,
  kPopC = 1,
  kPopE = 2,
  kReED = 3,
  kImED = 4,
  kReEC = 5,
  kImEC = 6,
  kReDC = 7,
  kImDC = 8,
};

// Atoms desorb unpolarized: equal ground populations, no coherences.
DensityVector unpolarized_ground();

double trace(const DensityVector& s);

// 3x3 Hermitian density matrix in the (|D>, |C>, |e>) basis.
Eigen::Matrix3cd to_matrix(const DensityVector& s);

// Smallest eigenvalue of the reconstructed density matrix.
double min_eigenvalue(const DensityVector& s);

// Populations within [-eps, 1+eps], PSD to -eps, trace <= 1+eps.
bool is_physical(const DensityVector& s, double eps = 1e-9);

}  // namespace density

}  // namespace darkcell

#endif  // DARKCELL_PARAMS_HPP
