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

#include "darkcell/signal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "darkcell/bloch.hpp"
#include "darkcell/parallel.hpp"
#include "darkcell/propagator.hpp"

namespace darkcell {

namespace {

DensityVector initial_state(const std::optional<DensityVector>& s0) {
  if (!s0) return density::unpolarized_ground();
  if (!s0->allFinite()) throw InvalidParams("initial state must be finite");
  return *s0;
}

// Wall-to-wall coherence integral of one velocity class; sign of v picks
// the wall through the optical detuning carried by M.
double path_S(const PhysicalParams& p, double v, const DensityVector& s0,
              bool background) {
  const Liouvillian L =
      background ? background_liouvillian(p, v) : build_liouvillian(p, v);
  const Propagator prop(L);
  const double T = p.cell_length / std::abs(v);
  return std::abs(v) * prop.integrated_state(s0, T)[density::kImEC];
}

// Long-time asymptote of S for the analytic [0, v_min] closure: steady
// state when gamma > 0, long-time trajectory average otherwise. The
// coherence-suppressed generator is singular in its silenced sector for
// any gamma, so the background limit always goes through the average.
double sliver_limit(const PhysicalParams& p, const QuadratureConfig& quad,
                    const DensityVector& s0, bool background) {
  const Liouvillian L = background ? background_liouvillian(p, 0.0)
                                   : build_liouvillian(p, 0.0);
  if (!background && p.ground_relax > 0.0)
    return p.cell_length * steady_state(L)[density::kImEC];
  const Propagator prop(L);
  const double T = p.cell_length / quad.v_min;
  return p.cell_length * prop.time_average(s0, T)[density::kImEC];
}

struct IntegralSetup {
  VelocityMesh mesh;
  std::vector<double> wdist;  // W(v) at positive nodes
  std::vector<double> wneg;   // W(-v); equals wdist for symmetric dists
  double sliver_weight = 0.0; // 2 v_min W(0) when the sliver applies
};

IntegralSetup make_setup(const VelocityDistribution& dist,
                         const QuadratureConfig& quad, double v_upper,
                         double focus) {
  IntegralSetup s;
  s.mesh = build_velocity_mesh(dist, quad, v_upper, focus);
  s.wdist.resize(s.mesh.nodes.size());
  s.wneg.resize(s.mesh.nodes.size());
  for (std::size_t i = 0; i < s.mesh.nodes.size(); ++i) {
    s.wdist[i] = dist.density(s.mesh.nodes[i]);
    s.wneg[i] = dist.density(-s.mesh.nodes[i]);
  }
  if (s.mesh.lower == quad.v_min)
    s.sliver_weight = 2.0 * quad.v_min * dist.density(0.0);
  return s;
}

// One absorbed-intensity value on a prepared setup, both velocity signs
// evaluated explicitly; fixed summation order.
double integrate(const PhysicalParams& p, const IntegralSetup& setup,
                 const QuadratureConfig& quad, const DensityVector& s0,
                 bool background) {
  double acc = 0.0;
  for (std::size_t i = 0; i < setup.mesh.nodes.size(); ++i) {
    const double v = setup.mesh.nodes[i];
    acc += setup.mesh.weights[i] *
           (setup.wdist[i] * path_S(p, v, s0, background) +
            setup.wneg[i] * path_S(p, -v, s0, background));
  }
  if (setup.sliver_weight > 0.0)
    acc += setup.sliver_weight * sliver_limit(p, quad, s0, background);
  return p.rabi * acc;
}

// Positive-velocity half of the integral, including half the sliver. At
// zero laser detuning S(-v, delta) = S(v, -delta), so the fully
// symmetrized signal is rabi * (half(delta) + half(-delta)).
double half_integral(const PhysicalParams& p, const IntegralSetup& setup,
                     const QuadratureConfig& quad, const DensityVector& s0,
                     bool background) {
  double acc = 0.0;
  for (std::size_t i = 0; i < setup.mesh.nodes.size(); ++i)
    acc += setup.mesh.weights[i] * setup.wdist[i] *
           path_S(p, setup.mesh.nodes[i], s0, background);
  if (setup.sliver_weight > 0.0)
    acc += 0.5 * setup.sliver_weight * sliver_limit(p, quad, s0, background);
  return acc;
}

bool mirror_symmetric(const std::vector<double>& grid) {
  const std::size_t n = grid.size();
  for (std::size_t i = 0; i <= n / 2; ++i)
    if (grid[i] != -grid[n - 1 - i]) return false;
  return true;
}

double integrate_fresh(const PhysicalParams& p,
                       const VelocityDistribution& dist,
                       const QuadratureConfig& quad, const DensityVector& s0,
                       bool background, double v_upper = 0.0) {
  const IntegralSetup setup =
      make_setup(dist, quad, v_upper, p.laser_detuning);
  return integrate(p, setup, quad, s0, background);
}

QuadratureConfig refined_nodes(QuadratureConfig q) {
  q.nodes_per_decade *= 2;
  q.verify_convergence = false;
  return q;
}

QuadratureConfig refined_vmin(QuadratureConfig q) {
  q.v_min *= 0.5;
  q.verify_convergence = false;
  return q;
}

// Refinement gate: the change under a doubled node density must stay
// below 0.1 % of the signal scale.
void gate_single(const PhysicalParams& p, const VelocityDistribution& dist,
                 const QuadratureConfig& quad, const DensityVector& s0,
                 bool background, double value) {
  const double refined =
      integrate_fresh(p, dist, refined_nodes(quad), s0, background);
  const double scale = std::max({std::abs(value), std::abs(refined), 1e-300});
  const double dev = std::abs(refined - value) / scale;
  if (dev >= 1e-3) {
    std::ostringstream msg;
    msg << "velocity quadrature did not converge (relative deviation " << dev
        << " under node doubling); achieved estimate " << refined;
    throw ConvergenceError(msg.str(), refined, dev);
  }
}

}  // namespace

double absorbed_intensity(const PhysicalParams& p,
                          const VelocityDistribution& dist,
                          const QuadratureConfig& quad,
                          const std::optional<DensityVector>& s0) {
  p.validate();
  const DensityVector sig0 = initial_state(s0);
  const double value = integrate_fresh(p, dist, quad, sig0, false);
  if (quad.verify_convergence) gate_single(p, dist, quad, sig0, false, value);
  return value;
}

double background_signal(const PhysicalParams& p,
                         const VelocityDistribution& dist,
                         const QuadratureConfig& quad,
                         const std::optional<DensityVector>& s0) {
  p.validate();
  const DensityVector sig0 = initial_state(s0);
  const double value = integrate_fresh(p, dist, quad, sig0, true);
  if (quad.verify_convergence) gate_single(p, dist, quad, sig0, true, value);
  return value;
}

namespace {

Spectrum compute_spectrum(const PhysicalParams& p,
                          const VelocityDistribution& dist,
                          const QuadratureConfig& quad,
                          const std::vector<double>& delta_grid,
                          unsigned workers,
                          const std::optional<DensityVector>& s0,
                          double v_upper) {
  p.validate();
  dist.validate();
  quad.validate();
  if (delta_grid.empty()) throw GridError("delta grid is empty");
  for (std::size_t i = 1; i < delta_grid.size(); ++i)
    if (!(delta_grid[i] > delta_grid[i - 1]))
      throw GridError("delta grid must be strictly increasing");

  const DensityVector sig0 = initial_state(s0);
  const IntegralSetup setup =
      make_setup(dist, quad, v_upper, p.laser_detuning);

  Spectrum spec;
  spec.delta = delta_grid;
  spec.values.assign(delta_grid.size(), 0.0);
  spec.kind = SpectrumKind::Direct;

  double bg = 0.0;
  const std::size_t n = delta_grid.size();
  if (p.laser_detuning == 0.0 && dist.symmetric() &&
      mirror_symmetric(delta_grid)) {
    // half the velocity work; the delta-mirror sum restores both walls
    // and makes the spectrum even in delta bit-exactly
    bg = 2.0 * p.rabi * half_integral(p, setup, quad, sig0, true);
    std::vector<double> half(n, 0.0);
    parallel_for(n, workers, [&](std::size_t i) {
      PhysicalParams q = p;
      q.raman_detuning = delta_grid[i];
      half[i] = half_integral(q, setup, quad, sig0, false);
    });
    for (std::size_t i = 0; i < n; ++i)
      spec.values[i] = p.rabi * (half[i] + half[n - 1 - i]) - bg;
  } else {
    bg = integrate(p, setup, quad, sig0, true);
    parallel_for(n, workers, [&](std::size_t i) {
      PhysicalParams q = p;
      q.raman_detuning = delta_grid[i];
      spec.values[i] = integrate(q, setup, quad, sig0, false) - bg;
    });
  }

  spec.meta.params = p;
  spec.meta.derived = derived_params(p);
  spec.meta.dist = dist;
  spec.meta.quad = quad;
  spec.meta.background = bg;
  if (v_upper > 0.0) spec.meta.delta_s = v_upper;

  if (quad.verify_convergence) {
    // gate on a representative subset: line center, innermost flanks, edges
    std::vector<std::size_t> probe;
    const std::size_t mid = n / 2;
    probe.push_back(mid);
    if (mid > 0) probe.push_back(mid - 1);
    if (mid + 1 < n) probe.push_back(mid + 1);
    probe.push_back(0);
    probe.push_back(n - 1);

    double scale = 1e-300;
    for (double v : spec.values) scale = std::max(scale, std::abs(v));

    ConvergenceDiag diag;
    diag.checked = true;
    for (const auto& refined : {refined_nodes(quad), refined_vmin(quad)}) {
      const IntegralSetup rsetup =
          make_setup(dist, refined, v_upper, p.laser_detuning);
      const double rbg = integrate(p, rsetup, refined, sig0, true);
      double dev = 0.0;
      for (std::size_t i : probe) {
        PhysicalParams q = p;
        q.raman_detuning = delta_grid[i];
        const double rv = integrate(q, rsetup, refined, sig0, false) - rbg;
        dev = std::max(dev, std::abs(rv - spec.values[i]) / scale);
      }
      if (refined.v_min == quad.v_min)
        diag.max_rel_dev_nodes = dev;
      else
        diag.max_rel_dev_vmin = dev;
      if (dev >= 1e-3) {
        std::ostringstream msg;
        msg << "spectrum quadrature did not converge (relative deviation "
            << dev << " under refinement)";
        throw ConvergenceError(msg.str(), spec.values[mid], dev);
      }
    }
    spec.meta.convergence = diag;
  }
  return spec;
}

}  // namespace

Spectrum dark_resonance_signal(const PhysicalParams& p,
                               const VelocityDistribution& dist,
                               const QuadratureConfig& quad,
                               const std::vector<double>& delta_grid,
                               unsigned workers,
                               const std::optional<DensityVector>& s0) {
  return compute_spectrum(p, dist, quad, delta_grid, workers, s0, 0.0);
}

Spectrum partial_velocity_signal(const PhysicalParams& p,
                                 const VelocityDistribution& dist,
                                 const QuadratureConfig& quad,
                                 const std::vector<double>& delta_grid,
                                 double delta_s, unsigned workers,
                                 const std::optional<DensityVector>& s0) {
  if (!(delta_s > 0.0)) throw InvalidParams("delta_s must be > 0");
  return compute_spectrum(p, dist, quad, delta_grid, workers, s0, delta_s);
}

Spectrum velocity_contribution(const PhysicalParams& p,
                               const VelocityDistribution& dist,
                               const QuadratureConfig& quad,
                               const std::vector<double>& delta_grid,
                               double v_z,
                               const std::optional<DensityVector>& s0) {
  p.validate();
  if (!std::isfinite(v_z) || std::abs(v_z) < quad.v_min)
    throw InvalidParams("velocity below the resolved minimum");
  const DensityVector sig0 = initial_state(s0);
  const double w = dist.density(v_z);
  const double sbg = path_S(p, v_z, sig0, true);

  Spectrum spec;
  spec.delta = delta_grid;
  spec.values.assign(delta_grid.size(), 0.0);
  spec.kind = SpectrumKind::Direct;
  for (std::size_t i = 0; i < delta_grid.size(); ++i) {
    PhysicalParams q = p;
    q.raman_detuning = delta_grid[i];
    spec.values[i] = p.rabi * w * (path_S(q, v_z, sig0, false) - sbg);
  }
  spec.meta.params = p;
  spec.meta.derived = derived_params(p);
  spec.meta.dist = dist;
  spec.meta.quad = quad;
  spec.meta.background = p.rabi * w * sbg;
  return spec;
}

}  // namespace darkcell
