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

#ifndef DARKCELL_SIGNAL_HPP
#define DARKCELL_SIGNAL_HPP

#include <optional>
#include <vector>

#include "darkcell/params.hpp"
#include "darkcell/spectrum.hpp"
#include "darkcell/velocity.hpp"

namespace darkcell {

// Absorbed intensity per unit atomic density (kappa = 1),
//   dI = Omega * int dv_z W(v_z) S(v_z),
// both velocity signs included. The unresolved [0, v_min] sliver is closed
// analytically as 2 v_min W(0) S_limit with S_limit the long-time asymptote
// (steady state for gamma > 0, long-time average otherwise).
// With quad.verify_convergence set, the refinement gate (doubled node
// density, < 0.1 % of signal scale) runs and failures raise
// ConvergenceError carrying the achieved estimate.
double absorbed_intensity(
    const PhysicalParams& p, const VelocityDistribution& dist,
    const QuadratureConfig& quad,
    const std::optional<DensityVector>& s0 = std::nullopt);

// Same integral on the coherence-suppressed Liouvillian; independent of
// the Raman detuning by construction.
double background_signal(
    const PhysicalParams& p, const VelocityDistribution& dist,
    const QuadratureConfig& quad,
    const std::optional<DensityVector>& s0 = std::nullopt);

// Pointwise absorbed_intensity(delta) minus the broad pumping background.
// delta_grid in Gamma. Runs the convergence gate on a representative
// subset of grid points unless quad.verify_convergence is off.
Spectrum dark_resonance_signal(
    const PhysicalParams& p, const VelocityDistribution& dist,
    const QuadratureConfig& quad, const std::vector<double>& delta_grid,
    unsigned workers = 0,
    const std::optional<DensityVector>& s0 = std::nullopt);

// Same signal with the velocity integral restricted to |v_z| < delta_s
// (background restricted to the same range).
Spectrum partial_velocity_signal(
    const PhysicalParams& p, const VelocityDistribution& dist,
    const QuadratureConfig& quad, const std::vector<double>& delta_grid,
    double delta_s, unsigned workers = 0,
    const std::optional<DensityVector>& s0 = std::nullopt);

// Background-subtracted integrand of one velocity class,
//   Omega * W(v_z) * [S(v_z; delta) - S_bg(v_z)],
// i.e. the contribution density of atoms at v_z to the dark spectrum.
Spectrum velocity_contribution(
    const PhysicalParams& p, const VelocityDistribution& dist,
    const QuadratureConfig& quad, const std::vector<double>& delta_grid,
    double v_z, const std::optional<DensityVector>& s0 = std::nullopt);

}  // namespace darkcell

#endif  // DARKCELL_SIGNAL_HPP
