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

#ifndef DARKCELL_BLOCH_HPP
#define DARKCELL_BLOCH_HPP

#include <Eigen/Dense>

#include "darkcell/params.hpp"

namespace darkcell {

// Generator of the linear evolution  sdot = M s + feed  for one velocity
// class. The optical detuning Delta = laser_detuning - v_z is baked into M.
//
// Field couplings use the full-Rabi convention: the Hamiltonian coupling
// between |e> and |C> is Omega/2, which makes gamma_p = Omega^2/Gamma the
// optical pumping rate out of |C> exactly.
struct Liouvillian {
  Eigen::Matrix<double, 9, 9> matrix;
  DensityVector feed_vec;  // (lambda, lambda, 0, ..., 0)
  double velocity = 0.0;   // v_z in Gamma/k
};

Liouvillian build_liouvillian(const PhysicalParams& p, double v_z);

// Coherence-suppressed model used for the broad pumping background:
// the rows and columns of Re s_DC / Im s_DC are zeroed so |D> becomes a
// pure population reservoir, and the Raman detuning is pinned to zero,
// making the result independent of delta by construction.
Liouvillian background_liouvillian(const PhysicalParams& p, double v_z);

}  // namespace darkcell

#endif  // DARKCELL_BLOCH_HPP
