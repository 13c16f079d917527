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

#ifndef DARKCELL_ORACLE_HPP
#define DARKCELL_ORACLE_HPP

#include <limits>

#include "darkcell/params.hpp"

namespace darkcell {

// Deliberately a different algorithm family from the production propagator
// (adaptive time stepping vs matrix functions), so agreement between the
// two is evidence rather than tautology.
struct OracleConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double max_step = std::numeric_limits<double>::infinity();

  void validate() const;
};

// Adaptive embedded Dormand-Prince 5(4) integration of sdot = M s + feed.
// Throws StiffnessError on step-size underflow.
DensityVector ode_oracle(const PhysicalParams& p, double v_z,
                         const DensityVector& s0, double t,
                         const OracleConfig& cfg = {});

// Time-quadrature route to the wall-to-wall coherence integral: the state
// is augmented with q' = Im s_eC and integrated to T = kL/|v_z|;
// returns |v_z| * q(T).
double oracle_path_integral(const PhysicalParams& p, double v_z,
                            const DensityVector& s0,
                            const OracleConfig& cfg = {});

}  // namespace darkcell

#endif  // DARKCELL_ORACLE_HPP
