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

#include <doctest.h>

#include <cmath>

#include "darkcell/oracle.hpp"
#include "darkcell/params.hpp"

using namespace darkcell;

TEST_CASE("oracle reproduces analytic free decay") {
  PhysicalParams p;
  p.rabi = 0.0;
  p.raman_detuning = 0.0;
  p.ground_relax = 0.0;
  p.branching = 0.4;
  DensityVector s0 = DensityVector::Zero();
  s0[density::kPopE] = 1.0;
  for (double t : {0.2, 2.0, 9.0}) {
    const DensityVector s = ode_oracle(p, 0.0, s0, t);
    CHECK(s[density::kPopE] == doctest::Approx(std::exp(-t)).epsilon(1e-10));
    CHECK(s[density::kPopD] ==
          doctest::Approx(0.2 * (1.0 - std::exp(-t))).epsilon(1e-10));
  }
}

TEST_CASE("oracle tolerances are validated") {
  OracleConfig cfg;
  cfg.rel_tol = -1.0;
  CHECK_THROWS_AS(cfg.validate(), InvalidParams);
  PhysicalParams p;
  CHECK_THROWS_AS(
      ode_oracle(p, 0.0, density::unpolarized_ground(), -1.0),
      InvalidParams);
}

TEST_CASE("oracle path integral needs a moving atom") {
  PhysicalParams p;
  CHECK_THROWS_AS(
      oracle_path_integral(p, 0.0, density::unpolarized_ground()),
      InvalidParams);
}
