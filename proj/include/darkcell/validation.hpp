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

#ifndef DARKCELL_VALIDATION_HPP
#define DARKCELL_VALIDATION_HPP

#include <cstdint>
#include <random>

#include "darkcell/oracle.hpp"
#include "darkcell/params.hpp"

namespace darkcell {

// Random but physical inputs for property checks.
struct RandomDraw {
  PhysicalParams params;
  double v_z = 0.0;
  DensityVector sigma0;
  double t = 0.0;
};

RandomDraw random_draw(std::mt19937_64& rng);

// Random density matrix (PSD, trace <= 1) mapped to the 9-vector.
DensityVector random_physical_state(std::mt19937_64& rng);

// Largest |state| difference between the closed-form propagator and the
// adaptive ODE oracle over `draws` random parameter/time draws.
double propagator_oracle_max_error(std::uint64_t seed, std::size_t draws,
                                   unsigned workers = 0);

}  // namespace darkcell

#endif  // DARKCELL_VALIDATION_HPP
