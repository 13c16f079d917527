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

#include "darkcell/lineshape.hpp"

#include <algorithm>
#include <cmath>

#include "darkcell/errors.hpp"

namespace darkcell {

namespace {

// Vertex of the parabola through three (possibly non-uniform) points.
std::pair<double, double> quadratic_vertex(double x0, double y0, double x1,
                                           double y1, double x2, double y2) {
  const double d1 = (y1 - y0) / (x1 - x0);
  const double d2 = (y2 - y1) / (x2 - x1);
  const double a = (d2 - d1) / (x2 - x0);
  if (a == 0.0) return {x1, y1};
  const double xv = 0.5 * ((x0 + x1) - d1 / a);
  const double yv = y0 + d1 * (xv - x0) + a * (xv - x0) * (xv - x1);
  return {xv, yv};
}

std::pair<double, double> refined_extremum(const std::vector<double>& x,
                                           const std::vector<double>& y,
                                           std::size_t i) {
  if (i == 0 || i + 1 == x.size()) return {x[i], y[i]};
  return quadratic_vertex(x[i - 1], y[i - 1], x[i], y[i], x[i + 1], y[i + 1]);
}

}  // namespace

Spectrum derivative(const Spectrum& spec) {
  if (spec.kind != SpectrumKind::Direct)
    throw InvalidParams("derivative expects a direct spectrum");
  const std::size_t n = spec.size();
  if (n < 3) throw GridError("grid too short to differentiate");

  const auto& x = spec.delta;
  const auto& f = spec.values;
  Spectrum out = spec;
  out.kind = SpectrumKind::Derivative;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double hm = x[i] - x[i - 1];
    const double hp = x[i + 1] - x[i];
    out.values[i] = (hm * hm * f[i + 1] - hp * hp * f[i - 1] +
                     (hp * hp - hm * hm) * f[i]) /
                    (hp * hm * (hp + hm));
  }
  out.values[0] = (f[1] - f[0]) / (x[1] - x[0]);
  out.values[n - 1] = (f[n - 1] - f[n - 2]) / (x[n - 1] - x[n - 2]);

  // If an extremum of the derivative sits on the first grid point beside
  // line center there is nothing to bracket it with: the central feature
  // is under-resolved and the caller must refine the grid.
  const std::size_t imax = static_cast<std::size_t>(
      std::max_element(out.values.begin(), out.values.end()) -
      out.values.begin());
  const std::size_t imin = static_cast<std::size_t>(
      std::min_element(out.values.begin(), out.values.end()) -
      out.values.begin());
  const auto zero_it = std::lower_bound(x.begin(), x.end(), 0.0);
  if (zero_it != x.end() && *zero_it == 0.0) {
    const std::size_t iz = static_cast<std::size_t>(zero_it - x.begin());
    for (std::size_t e : {imax, imin}) {
      if ((iz > 0 && e == iz - 1) || e == iz + 1)
        throw GridError(
            "line-center cusp under-resolved: derivative extremum on the "
            "innermost grid point; refine the delta grid");
    }
  }
  return out;
}

LineshapeFeatures extract_features(const Spectrum& deriv) {
  if (deriv.kind != SpectrumKind::Derivative)
    throw InvalidParams("extract_features expects a derivative spectrum");
  const std::size_t n = deriv.size();
  if (n < 3) throw GridError("grid too short for feature extraction");

  const auto& x = deriv.delta;
  const auto& y = deriv.values;
  const std::size_t imax = static_cast<std::size_t>(
      std::max_element(y.begin(), y.end()) - y.begin());
  const std::size_t imin = static_cast<std::size_t>(
      std::min_element(y.begin(), y.end()) - y.begin());

  const auto [xM, yM] = refined_extremum(x, y, imax);
  const auto [xm, ym] = refined_extremum(x, y, imin);

  LineshapeFeatures f;
  f.pos_max = xM;
  f.pos_min = xm;
  f.width_pp = std::abs(xM - xm);
  f.amp_pp = yM - ym;
  const double gp = deriv.meta.derived.pump_rate;
  f.width_pp_over_gp = gp > 0.0 ? f.width_pp / gp : 0.0;
  if (!(f.width_pp > 0.0))
    f.warnings.push_back("degenerate extrema: peak-to-peak width is zero");

  // secondary local extrema within 10 % of the global ones (broad wing
  // structures at large laser detuning)
  auto is_local_max = [&](std::size_t i) {
    return i > 0 && i + 1 < n && y[i] >= y[i - 1] && y[i] >= y[i + 1];
  };
  auto is_local_min = [&](std::size_t i) {
    return i > 0 && i + 1 < n && y[i] <= y[i - 1] && y[i] <= y[i + 1];
  };
  const double span = yM - ym;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (i + 2 > imax && i < imax + 2) continue;
    if (i + 2 > imin && i < imin + 2) continue;
    if (is_local_max(i) && yM - y[i] < 0.1 * span) {
      f.warnings.push_back("non-unimodal wings: secondary maximum within 10%");
      break;
    }
    if (is_local_min(i) && y[i] - ym < 0.1 * span) {
      f.warnings.push_back("non-unimodal wings: secondary minimum within 10%");
      break;
    }
  }
  return f;
}

double direct_amplitude(const Spectrum& spec) {
  if (spec.values.empty()) throw GridError("empty spectrum");
  const auto [lo, hi] =
      std::minmax_element(spec.values.begin(), spec.values.end());
  return *hi - *lo;
}

PowerLawFit fit_power_law(const std::vector<double>& x,
                          const std::vector<double>& y, double range_lo,
                          double range_hi) {
  if (x.size() != y.size()) throw FitError("x/y size mismatch");
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < range_lo || x[i] > range_hi) continue;
    if (!(x[i] > 0.0)) throw FitError("non-positive axis value in fit range");
    if (!(y[i] > 0.0)) throw FitError("non-positive feature value in fit range");
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(y[i]));
  }
  if (lx.size() < 4)
    throw FitError("power-law fit needs at least 4 points in range");

  const double n = static_cast<double>(lx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw FitError("degenerate abscissae");
  const double slope = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / n;

  double ss = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double r = ly[i] - (intercept + slope * lx[i]);
    ss += r * r;
  }

  PowerLawFit fit;
  fit.exponent = slope;
  fit.prefactor = std::exp(intercept);
  fit.residual = std::sqrt(ss / n);
  fit.range_lo = range_lo;
  fit.range_hi = range_hi;
  fit.n_points = static_cast<int>(lx.size());
  return fit;
}

}  // namespace darkcell
