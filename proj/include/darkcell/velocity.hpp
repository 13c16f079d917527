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

#ifndef DARKCELL_VELOCITY_HPP
#define DARKCELL_VELOCITY_HPP

#include <utility>
#include <vector>

namespace darkcell {

enum class DistKind { MaxwellBoltzmann, TruncatedMB, Tabulated };

// Longitudinal velocity distribution W(v_z). Velocities in Gamma/k,
// width u relates to the Doppler width through k*u = Delta_D.
struct VelocityDistribution {
  DistKind kind = DistKind::MaxwellBoltzmann;
  double width = 50.0;   // u
  double cutoff = 0.0;   // TruncatedMB: W = 0 for |v_z| < cutoff, NOT renormalized
  std::vector<std::pair<double, double>> table;  // Tabulated: (v, W) pairs

  static VelocityDistribution maxwell(double u);
  static VelocityDistribution truncated(double u, double v_c);
  static VelocityDistribution tabulated(
      std::vector<std::pair<double, double>> table);

  double density(double v) const;
  // Even in v? (Maxwell-Boltzmann and truncated are; tables are checked.)
  bool symmetric() const;
  void validate() const;
};

struct QuadratureConfig {
  double v_min = 1e-6;        // smallest resolved |v_z|
  double v_max = 0.0;         // 0 = auto (5u; keeps the M-B norm gate at 1e-10)
  int nodes_per_decade = 16;  // log-graded node density
  int panel_order = 8;        // Gauss-Legendre order per panel
  bool verify_convergence = true;

  double resolved_v_max(double u) const { return v_max > 0.0 ? v_max : 5.0 * u; }
  void validate() const;
};

// Log-graded panel mesh on the positive axis; nodes ascending.
struct VelocityMesh {
  std::vector<double> nodes;
  std::vector<double> weights;
  double lower = 0.0;  // first panel boundary actually used
  double upper = 0.0;
};

// Mesh over [max(v_min, dist cutoff), min(resolved v_max, v_upper)].
// An empty mesh is returned when the interval is void. A nonzero focus
// adds fine panels around |focus| where a detuned laser selects its
// resonant velocity class.
VelocityMesh build_velocity_mesh(const VelocityDistribution& dist,
                                 const QuadratureConfig& quad,
                                 double v_upper = 0.0, double focus = 0.0);

// int_{-inf}^{inf} W(v) dv under the module quadrature (plus the analytic
// [0, v_min] sliver where W is flat); the M-B invariant check.
double distribution_norm(const VelocityDistribution& dist,
                         const QuadratureConfig& quad);

// Nodes/weights of the n-point Gauss-Legendre rule on [-1, 1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

}  // namespace darkcell

#endif  // DARKCELL_VELOCITY_HPP
