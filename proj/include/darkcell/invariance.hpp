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

#ifndef DARKCELL_INVARIANCE_HPP
#define DARKCELL_INVARIANCE_HPP

#include <vector>

#include "darkcell/signal.hpp"

namespace darkcell {

struct InvarianceReport {
  // Max pointwise deviation of the raw signals, relative to the reference
  // spectrum's peak scale. The raw signals coincide because the absorbed
  // intensity depends on (phi, delta/gamma_p, gamma/gamma_p, alpha) only.
  double absolute_deviation = 0.0;
  // Same metric after scaling every spectrum to unit peak amplitude.
  double shape_deviation = 0.0;
  std::vector<Spectrum> spectra;  // one per parameter set
};

// Computes dark-resonance spectra for parameter sets sharing
// (phi, gamma/gamma_p, alpha, Delta_D) exactly, on a shared delta/gamma_p
// grid, and reports their maximal pointwise deviation.
// Throws MismatchError when the dimensionless parameters differ.
InvarianceReport invariance_harness(const std::vector<PhysicalParams>& sets,
                                    const QuadratureConfig& quad,
                                    const GridSpec& grid,
                                    unsigned workers = 0);

}  // namespace darkcell

#endif  // DARKCELL_INVARIANCE_HPP
