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

#include "darkcell/invariance.hpp"
#include "darkcell/scan.hpp"

using namespace darkcell;

namespace {

GridSpec small_grid() {
  GridSpec g;
  g.points_per_decade = 10;
  g.max_over_gp = 30.0;
  g.min_over_gp = 1e-3;
  return g;
}

QuadratureConfig fast_quad() {
  QuadratureConfig q;
  q.verify_convergence = false;
  return q;
}

}  // namespace

TEST_CASE("axis parsing round-trips") {
  for (const auto* name :
       {"kL", "omega2", "alpha", "gamma", "delta_omega", "v_c"}) {
    CHECK(scan_axis_name(parse_scan_axis(name)) == name);
  }
  CHECK_THROWS_AS(parse_scan_axis("bogus"), InvalidParams);
}

TEST_CASE("scan runs per point and keeps going after failures") {
  PhysicalParams p;
  p.rabi = 0.01;
  p.branching = 0.7;
  const auto dist = VelocityDistribution::maxwell(50.0);
  // kL = -1 is invalid and must be recorded, not thrown
  const ScanResult r = scan(p, dist, fast_quad(), small_grid(),
                            ScanAxis::CellLength, {-1.0, 200.0});
  REQUIRE(r.points.size() == 2);
  CHECK(!r.points[0].ok());
  CHECK(!r.points[0].error.empty());
  CHECK(r.points[1].ok());
  REQUIRE(r.points[1].features.has_value());
  CHECK(r.points[1].features->width_pp > 0.0);
  CHECK(r.points[1].direct_amplitude > 0.0);
}

TEST_CASE("scan values must ascend") {
  PhysicalParams p;
  const auto dist = VelocityDistribution::maxwell(50.0);
  CHECK_THROWS_AS(scan(p, dist, fast_quad(), small_grid(),
                       ScanAxis::Branching, {0.9, 0.5}),
                  InvalidParams);
}

TEST_CASE("single-point scans cannot be fitted") {
  PhysicalParams p;
  p.rabi = 0.01;
  const auto dist = VelocityDistribution::maxwell(50.0);
  const ScanResult r = scan(p, dist, fast_quad(), small_grid(),
                            ScanAxis::CellLength, {100.0});
  REQUIRE(r.points.size() == 1);
  CHECK(r.points[0].ok());
  CHECK_THROWS_AS(fit_width(r, 0.0, 1e9), FitError);
}

TEST_CASE("cutoff axis switches the distribution kind") {
  PhysicalParams p;
  p.rabi = 0.1;
  p.ground_relax = 1e-3;
  p.cell_length = 40.0;
  const auto dist = VelocityDistribution::maxwell(50.0);
  const ScanResult r = scan(p, dist, fast_quad(), small_grid(),
                            ScanAxis::Cutoff, {0.0, 0.2});
  REQUIRE(r.points.size() == 2);
  CHECK(r.points[0].ok());
  CHECK(r.points[1].ok());
  // removing slow atoms broadens the line
  CHECK(r.points[1].features->width_pp > r.points[0].features->width_pp);
}

TEST_CASE("invariance harness input checking") {
  PhysicalParams a;
  a.rabi = 0.01;
  a.cell_length = 1000.0;
  a.ground_relax = 1e-6;
  PhysicalParams b = a;

  SUBCASE("identical sets have zero deviation") {
    const auto rep =
        invariance_harness({a, b}, fast_quad(), small_grid());
    CHECK(rep.absolute_deviation == 0.0);
    CHECK(rep.shape_deviation == 0.0);
  }

  SUBCASE("mismatched phi is rejected") {
    b.cell_length = 900.0;
    CHECK_THROWS_AS(invariance_harness({a, b}, fast_quad(), small_grid()),
                    MismatchError);
  }

  SUBCASE("mismatched alpha is rejected") {
    b.branching = 0.9;
    CHECK_THROWS_AS(invariance_harness({a, b}, fast_quad(), small_grid()),
                    MismatchError);
  }

  SUBCASE("mismatched gamma/gamma_p is rejected") {
    b.ground_relax = 2e-6;
    CHECK_THROWS_AS(invariance_harness({a, b}, fast_quad(), small_grid()),
                    MismatchError);
  }
}

TEST_CASE("features are stable under delta-grid refinement") {
  PhysicalParams p;
  p.rabi = 0.01;
  p.branching = 0.7;
  p.cell_length = 1000.0;
  const auto dist = VelocityDistribution::maxwell(50.0);
  QuadratureConfig quad;
  quad.verify_convergence = false;

  auto features_at = [&](int ppd) {
    GridSpec g;
    g.points_per_decade = ppd;
    const auto grid = make_delta_grid(1e-4, g);
    const Spectrum s = dark_resonance_signal(p, dist, quad, grid);
    return extract_features(derivative(s));
  };
  const LineshapeFeatures coarse = features_at(20);
  const LineshapeFeatures fine = features_at(40);
  CHECK(std::abs(fine.width_pp / coarse.width_pp - 1.0) < 0.01);
  CHECK(std::abs(fine.amp_pp / coarse.amp_pp - 1.0) < 0.01);
}

TEST_CASE("deviation metric responds to a branching-ratio change") {
  // negative control for the invariance harness: same (phi, gamma/gamma_p)
  // but alpha perturbed by 0.1 must not look invariant
  QuadratureConfig quad;
  quad.verify_convergence = false;
  GridSpec g = small_grid();

  auto spectrum_for = [&](double alpha) {
    PhysicalParams p;
    p.rabi = 0.01;
    p.cell_length = 1000.0;
    p.ground_relax = 1e-6;
    p.branching = alpha;
    const auto grid = make_delta_grid(1e-4, g);
    return dark_resonance_signal(p, VelocityDistribution::maxwell(50.0),
                                 quad, grid);
  };
  const Spectrum a = spectrum_for(0.7);
  const Spectrum b = spectrum_for(0.8);
  double scale = 0.0, dev = 0.0;
  for (double v : a.values) scale = std::max(scale, std::abs(v));
  for (std::size_t i = 0; i < a.size(); ++i)
    dev = std::max(dev, std::abs(a.values[i] - b.values[i]) / scale);
  CHECK(dev > 0.05);

  // and the harness itself refuses the mismatched input
  PhysicalParams pa, pb;
  pa.rabi = pb.rabi = 0.01;
  pa.cell_length = pb.cell_length = 1000.0;
  pa.ground_relax = pb.ground_relax = 1e-6;
  pa.branching = 0.7;
  pb.branching = 0.8;
  CHECK_THROWS_AS(invariance_harness({pa, pb}, quad, g), MismatchError);
}
