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

#include "darkcell/bloch.hpp"

#include <cmath>

namespace darkcell {

using density::kImDC;
using density::kImEC;
using density::kImED;
using density::kPopC;
using density::kPopD;
using density::kPopE;
using density::kReDC;
using density::kReEC;
using density::kReED;

Liouvillian build_liouvillian(const PhysicalParams& p, double v_z) {
  p.validate();
  if (!std::isfinite(v_z)) throw InvalidParams("v_z must be finite");

  constexpr double G = 1.0;            // Gamma
  const double g = 0.5 * p.rabi;       // Hamiltonian coupling Omega/2
  const double al = p.branching;
  const double ga = p.ground_relax;
  const double de = p.raman_detuning;
  const double Delta = p.laser_detuning - v_z;  // optical detuning
  const double ko = 0.5 * G + ga;               // optical coherence decay

  Liouvillian L;
  L.velocity = v_z;
  L.matrix.setZero();
  auto& M = L.matrix;

  // populations
  M(kPopD, kPopD) = -ga;
  M(kPopD, kPopE) = 0.5 * al * G;
  M(kPopD, kImDC) = de;
  M(kPopC, kPopC) = -ga;
  M(kPopC, kPopE) = 0.5 * al * G;
  M(kPopC, kImEC) = 2.0 * g;
  M(kPopC, kImDC) = -de;
  M(kPopE, kPopE) = -(G + ga);
  M(kPopE, kImEC) = -2.0 * g;

  // optical coherence e-D
  M(kReED, kReED) = -ko;
  M(kReED, kImED) = -Delta;
  M(kReED, kImEC) = 0.5 * de;
  M(kReED, kImDC) = -g;
  M(kImED, kReED) = Delta;
  M(kImED, kImED) = -ko;
  M(kImED, kReEC) = -0.5 * de;
  M(kImED, kReDC) = -g;

  // optical coherence e-C
  M(kReEC, kReEC) = -ko;
  M(kReEC, kImEC) = -Delta;
  M(kReEC, kImED) = 0.5 * de;
  M(kImEC, kReEC) = Delta;
  M(kImEC, kImEC) = -ko;
  M(kImEC, kReED) = -0.5 * de;
  M(kImEC, kPopC) = -g;
  M(kImEC, kPopE) = g;

  // Raman coherence D-C
  M(kReDC, kReDC) = -ga;
  M(kReDC, kImED) = g;
  M(kImDC, kImDC) = -ga;
  M(kImDC, kReED) = g;
  M(kImDC, kPopD) = -0.5 * de;
  M(kImDC, kPopC) = 0.5 * de;

  L.feed_vec = DensityVector::Zero();
  const double lam = p.lambda_value();
  L.feed_vec[kPopD] = lam;
  L.feed_vec[kPopC] = lam;
  return L;
}

Liouvillian background_liouvillian(const PhysicalParams& p, double v_z) {
  PhysicalParams q = p;
  q.raman_detuning = 0.0;
  Liouvillian L = build_liouvillian(q, v_z);
  L.matrix.row(kReDC).setZero();
  L.matrix.row(kImDC).setZero();
  L.matrix.col(kReDC).setZero();
  L.matrix.col(kImDC).setZero();
  return L;
}

}  // namespace darkcell
