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

#include "darkcell/velocity.hpp"

#include <algorithm>
#include <cmath>

#include "darkcell/errors.hpp"

namespace darkcell {

VelocityDistribution VelocityDistribution::maxwell(double u) {
  VelocityDistribution d;
  d.kind = DistKind::MaxwellBoltzmann;
  d.width = u;
  d.validate();
  return d;
}

VelocityDistribution VelocityDistribution::truncated(double u, double v_c) {
  VelocityDistribution d;
  d.kind = DistKind::TruncatedMB;
  d.width = u;
  d.cutoff = v_c;
  d.validate();
  return d;
}

VelocityDistribution VelocityDistribution::tabulated(
    std::vector<std::pair<double, double>> table) {
  VelocityDistribution d;
  d.kind = DistKind::Tabulated;
  d.table = std::move(table);
  std::sort(d.table.begin(), d.table.end());
  d.validate();
  return d;
}

void VelocityDistribution::validate() const {
  if (!(width > 0.0) || !std::isfinite(width))
    throw InvalidParams("distribution width must be > 0");
  if (kind == DistKind::TruncatedMB && (cutoff < 0.0 || !std::isfinite(cutoff)))
    throw InvalidParams("truncation cutoff must be >= 0");
  if (kind == DistKind::Tabulated) {
    if (table.size() < 2) throw InvalidParams("table needs at least 2 rows");
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (!std::isfinite(table[i].first) || !std::isfinite(table[i].second) ||
          table[i].second < 0.0)
        throw InvalidParams("table entries must be finite with W >= 0");
      if (i > 0 && table[i].first <= table[i - 1].first)
        throw InvalidParams("table velocities must be strictly increasing");
    }
  }
}

double VelocityDistribution::density(double v) const {
  switch (kind) {
    case DistKind::TruncatedMB:
      if (std::abs(v) < cutoff) return 0.0;
      [[fallthrough]];
    case DistKind::MaxwellBoltzmann: {
      const double x = v / width;
      return std::exp(-x * x) / (width * std::sqrt(M_PI));
    }
    case DistKind::Tabulated: {
      if (v <= table.front().first || v >= table.back().first) {
        if (v == table.front().first) return table.front().second;
        if (v == table.back().first) return table.back().second;
        return 0.0;
      }
      auto it = std::upper_bound(
          table.begin(), table.end(), std::make_pair(v, 0.0),
          [](const auto& a, const auto& b) { return a.first < b.first; });
      const auto& [x1, w1] = *it;
      const auto& [x0, w0] = *(it - 1);
      return w0 + (w1 - w0) * (v - x0) / (x1 - x0);
    }
  }
  return 0.0;
}

bool VelocityDistribution::symmetric() const {
  return kind != DistKind::Tabulated;
}

void QuadratureConfig::validate() const {
  if (!(v_min > 0.0) || !std::isfinite(v_min))
    throw InvalidParams("v_min must be > 0");
  if (v_max != 0.0 && !(v_max > v_min))
    throw InvalidParams("v_max must exceed v_min");
  if (nodes_per_decade < 1) throw InvalidParams("nodes_per_decade must be >= 1");
  if (panel_order < 2 || panel_order > 64)
    throw InvalidParams("panel_order must be in [2, 64]");
}

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev initial guess, Newton on P_n
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
}

VelocityMesh build_velocity_mesh(const VelocityDistribution& dist,
                                 const QuadratureConfig& quad,
                                 double v_upper, double focus) {
  dist.validate();
  quad.validate();

  const double lo = std::max(quad.v_min,
                             dist.kind == DistKind::TruncatedMB ? dist.cutoff
                                                                : 0.0);
  double hi = quad.resolved_v_max(dist.width);
  if (v_upper > 0.0) hi = std::min(hi, v_upper);

  VelocityMesh mesh;
  mesh.lower = lo;
  mesh.upper = hi;
  if (!(hi > lo)) return mesh;

  const int panels_per_decade =
      std::max(1, quad.nodes_per_decade / quad.panel_order);
  const double decades = std::log10(hi / lo);
  const int n_panels =
      std::max(1, static_cast<int>(std::ceil(decades * panels_per_decade)));

  // geometric boundaries with a width cap of u/2, so the Gauss-Legendre
  // panels keep resolving the distribution out in the thermal tail
  const double tail_cap = 0.5 * dist.width;
  std::vector<double> bounds;
  bounds.push_back(lo);
  for (int p = 1; p <= n_panels; ++p) {
    const double b =
        (p == n_panels) ? hi : lo * std::pow(10.0, p * decades / n_panels);
    const double prev = bounds.back();
    if (b - prev > tail_cap) {
      const int sub = static_cast<int>(std::ceil((b - prev) / tail_cap));
      for (int s = 1; s < sub; ++s)
        bounds.push_back(prev + (b - prev) * s / sub);
    }
    bounds.push_back(b);
  }

  // a detuned laser selects its resonant class at |v| ~ |focus|; add fine
  // panels across the optical width there
  const double f0 = std::abs(focus);
  if (f0 > 0.0 && f0 - 3.0 < hi && f0 + 3.0 > lo) {
    const double z_lo = std::max(lo, f0 - 3.0);
    const double z_hi = std::min(hi, f0 + 3.0);
    const int nz = static_cast<int>(std::ceil((z_hi - z_lo) / 0.25));
    for (int s = 0; s <= nz; ++s)
      bounds.push_back(z_lo + (z_hi - z_lo) * s / nz);
    std::sort(bounds.begin(), bounds.end());
    bounds.erase(std::unique(bounds.begin(), bounds.end(),
                             [](double a, double b) {
                               return b - a < 1e-3 * (std::abs(a) + 1e-30);
                             }),
                 bounds.end());
    bounds.front() = lo;
    bounds.back() = hi;
  }

  std::vector<double> gx, gw;
  gauss_legendre(quad.panel_order, gx, gw);

  mesh.nodes.reserve((bounds.size() - 1) * quad.panel_order);
  mesh.weights.reserve(mesh.nodes.capacity());
  for (std::size_t p = 0; p + 1 < bounds.size(); ++p) {
    const double mid = 0.5 * (bounds[p] + bounds[p + 1]);
    const double half = 0.5 * (bounds[p + 1] - bounds[p]);
    for (int q = 0; q < quad.panel_order; ++q) {
      mesh.nodes.push_back(mid + half * gx[q]);
      mesh.weights.push_back(half * gw[q]);
    }
  }
  return mesh;
}

double distribution_norm(const VelocityDistribution& dist,
                         const QuadratureConfig& quad) {
  const VelocityMesh mesh = build_velocity_mesh(dist, quad);
  double acc = 0.0;
  for (std::size_t i = 0; i < mesh.nodes.size(); ++i) {
    const double v = mesh.nodes[i];
    acc += mesh.weights[i] * (dist.density(v) + dist.density(-v));
  }
  // [0, v_min) sliver where W is flat
  if (mesh.lower == quad.v_min) acc += 2.0 * quad.v_min * dist.density(0.0);
  return acc;
}

}  // namespace darkcell
