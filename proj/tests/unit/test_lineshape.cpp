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

#include "darkcell/lineshape.hpp"

using namespace darkcell;

namespace {

Spectrum synthetic(const std::vector<double>& x,
                   const std::vector<double>& y, SpectrumKind kind) {
  Spectrum s;
  s.delta = x;
  s.values = y;
  s.kind = kind;
  s.meta.derived.pump_rate = 1.0;
  return s;
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = lo + (hi - lo) * i / (n - 1);
  return x;
}

}  // namespace

TEST_CASE("derivative of an even spectrum is odd") {
  const auto grid = make_delta_grid(1.0, GridSpec{});
  std::vector<double> y(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    y[i] = 1.0 / (1.0 + grid[i] * grid[i]);
  const Spectrum d = derivative(synthetic(grid, y, SpectrumKind::Direct));
  const std::size_t n = grid.size();
  for (std::size_t i = 0; i < n / 2; ++i)
    CHECK(d.values[i] == doctest::Approx(-d.values[n - 1 - i]).epsilon(1e-10));
}

TEST_CASE("derivative of a Lorentzian matches the closed form") {
  const double w = 2.0;
  const auto x = uniform_grid(-20.0, 20.0, 60001);
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    y[i] = 1.0 / (1.0 + (x[i] / w) * (x[i] / w));
  const Spectrum d = derivative(synthetic(x, y, SpectrumKind::Direct));
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < x.size(); ++i) {
    const double u = x[i] / w;
    const double exact = -2.0 * u / w / std::pow(1.0 + u * u, 2.0);
    if (std::abs(exact) < 1e-3) continue;  // relative check away from zeros
    worst = std::max(worst, std::abs(d.values[i] - exact) / std::abs(exact));
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("features of the odd synthetic line a*x*exp(-x^2/2w^2)") {
  const double a = 3.0, w = 0.5;
  const auto x = uniform_grid(-5.0, 5.0, 4001);
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    y[i] = a * x[i] * std::exp(-x[i] * x[i] / (2.0 * w * w));
  const LineshapeFeatures f =
      extract_features(synthetic(x, y, SpectrumKind::Derivative));
  CHECK(f.width_pp == doctest::Approx(2.0 * w).epsilon(1e-5));
  CHECK(f.amp_pp ==
        doctest::Approx(2.0 * a * w * std::exp(-0.5)).epsilon(1e-6));
  CHECK(f.pos_max == doctest::Approx(w).epsilon(1e-4));
  CHECK(f.pos_min == doctest::Approx(-w).epsilon(1e-4));
  CHECK(f.warnings.empty());
}

TEST_CASE("under-resolved cusp is refused") {
  // feature much narrower than the innermost grid spacing: the derivative
  // extremum lands on the first point beside zero
  GridSpec g;
  g.min_over_gp = 0.1;
  g.max_over_gp = 10.0;
  g.points_per_decade = 4;
  g.linear_patch_points = 0;
  const auto x = make_delta_grid(1.0, g);
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    y[i] = -std::exp(-std::abs(x[i]) / 1e-3);
  CHECK_THROWS_AS(derivative(synthetic(x, y, SpectrumKind::Direct)),
                  GridError);
}

TEST_CASE("secondary extrema are reported") {
  const auto x = uniform_grid(-10.0, 10.0, 2001);
  std::vector<double> y(x.size());
  auto bump = [](double t) { return std::exp(-t * t); };
  for (std::size_t i = 0; i < x.size(); ++i)
    y[i] = bump(x[i] - 1.0) - bump(x[i] + 1.0) + 0.95 * bump(x[i] - 6.0) -
           0.95 * bump(x[i] + 6.0);
  const LineshapeFeatures f =
      extract_features(synthetic(x, y, SpectrumKind::Derivative));
  CHECK(!f.warnings.empty());
}

TEST_CASE("kind mismatches are rejected") {
  const auto x = uniform_grid(-1.0, 1.0, 11);
  std::vector<double> y(x.size(), 1.0);
  CHECK_THROWS_AS(derivative(synthetic(x, y, SpectrumKind::Derivative)),
                  InvalidParams);
  CHECK_THROWS_AS(extract_features(synthetic(x, y, SpectrumKind::Direct)),
                  InvalidParams);
}

TEST_CASE("power-law fit") {
  SUBCASE("exact recovery of y = 3 x^-2") {
    std::vector<double> x, y;
    for (double v : {1.0, 2.0, 5.0, 10.0, 20.0}) {
      x.push_back(v);
      y.push_back(3.0 / (v * v));
    }
    const PowerLawFit fit = fit_power_law(x, y, 0.5, 50.0);
    CHECK(fit.exponent == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(fit.prefactor == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(fit.residual <= 1e-12);
    CHECK(fit.n_points == 5);
  }

  SUBCASE("residual is the log-space RMS") {
    std::vector<double> x = {1.0, 2.0, 4.0, 8.0};
    std::vector<double> y = {1.0, 2.0, 4.0, 8.0};
    y[2] *= std::exp(0.1);  // one point off by 10% in log space
    const PowerLawFit fit = fit_power_law(x, y, 0.5, 10.0);
    CHECK(fit.residual > 0.02);
    CHECK(fit.residual < 0.1);
  }

  SUBCASE("error paths") {
    CHECK_THROWS_AS(fit_power_law({1, 2, 3}, {1, 2, 3}, 0, 10), FitError);
    CHECK_THROWS_AS(
        fit_power_law({1, 2, 3, 4}, {1, 2, -3, 4}, 0, 10), FitError);
    CHECK_THROWS_AS(
        fit_power_law({1, 2, 3, 4}, {1, 2, 3}, 0, 10), FitError);
  }
}
