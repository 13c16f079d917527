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

#include "darkcell/errors.hpp"
#include "darkcell/velocity.hpp"

using namespace darkcell;

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
  for (int n : {2, 4, 8, 12}) {
    std::vector<double> x, w;
    gauss_legendre(n, x, w);
    REQUIRE(static_cast<int>(x.size()) == n);
    // exact for degree <= 2n-1
    for (int deg = 0; deg <= 2 * n - 1; ++deg) {
      double acc = 0.0;
      for (int i = 0; i < n; ++i) acc += w[i] * std::pow(x[i], deg);
      const double exact = (deg % 2 == 0) ? 2.0 / (deg + 1) : 0.0;
      CHECK(acc == doctest::Approx(exact).epsilon(1e-13).scale(1.0));
    }
  }
}

TEST_CASE("Maxwell-Boltzmann normalizes to 1 under the module quadrature") {
  const auto dist = VelocityDistribution::maxwell(50.0);
  QuadratureConfig quad;
  CHECK(std::abs(distribution_norm(dist, quad) - 1.0) <= 1e-10);
}

TEST_CASE("truncated distribution removes the central band, unrenormalized") {
  const auto dist = VelocityDistribution::truncated(50.0, 0.2);
  CHECK(dist.density(0.1) == 0.0);
  CHECK(dist.density(-0.19) == 0.0);
  const auto mb = VelocityDistribution::maxwell(50.0);
  CHECK(dist.density(0.3) == mb.density(0.3));  // untouched above cutoff

  QuadratureConfig quad;
  const double norm = distribution_norm(dist, quad);
  // missing probability = erf(v_c / u), here tiny but strictly positive
  const double missing = std::erf(0.2 / 50.0);
  CHECK(std::abs(norm - (1.0 - missing)) <= 1e-10);
}

TEST_CASE("tabulated distribution interpolates and clips") {
  const auto dist = VelocityDistribution::tabulated(
      {{-1.0, 0.0}, {0.0, 1.0}, {2.0, 0.5}});
  CHECK(dist.density(-0.5) == doctest::Approx(0.5));
  CHECK(dist.density(1.0) == doctest::Approx(0.75));
  CHECK(dist.density(5.0) == 0.0);
  CHECK(!dist.symmetric());
  CHECK_THROWS_AS(
      VelocityDistribution::tabulated({{0.0, 1.0}, {0.0, 2.0}}),
      InvalidParams);
  CHECK_THROWS_AS(
      VelocityDistribution::tabulated({{0.0, -1.0}, {1.0, 2.0}}),
      InvalidParams);
}

TEST_CASE("mesh construction") {
  const auto dist = VelocityDistribution::maxwell(50.0);
  QuadratureConfig quad;

  SUBCASE("covers [v_min, 5u] by default") {
    const VelocityMesh mesh = build_velocity_mesh(dist, quad);
    CHECK(mesh.lower == quad.v_min);
    CHECK(mesh.upper == doctest::Approx(250.0));
    CHECK(mesh.nodes.front() > quad.v_min);
    CHECK(mesh.nodes.back() < 250.0);
    for (std::size_t i = 1; i < mesh.nodes.size(); ++i)
      CHECK(mesh.nodes[i] > mesh.nodes[i - 1]);
  }

  SUBCASE("truncation moves the lower edge onto the cutoff") {
    const auto trunc = VelocityDistribution::truncated(50.0, 0.05);
    const VelocityMesh mesh = build_velocity_mesh(trunc, quad);
    CHECK(mesh.lower == 0.05);
    for (double v : mesh.nodes) CHECK(v >= 0.05);
  }

  SUBCASE("upper restriction for partial integrals") {
    const VelocityMesh mesh = build_velocity_mesh(dist, quad, 0.01);
    CHECK(mesh.upper == doctest::Approx(0.01));
    for (double v : mesh.nodes) CHECK(v <= 0.01);
  }

  SUBCASE("void interval yields an empty mesh") {
    const auto trunc = VelocityDistribution::truncated(50.0, 1.0);
    const VelocityMesh mesh = build_velocity_mesh(trunc, quad, 0.5);
    CHECK(mesh.nodes.empty());
  }
}

TEST_CASE("quadrature config validation") {
  QuadratureConfig quad;
  quad.v_min = 0.0;
  CHECK_THROWS_AS(quad.validate(), InvalidParams);
  quad = {};
  quad.v_max = 1e-9;
  CHECK_THROWS_AS(quad.validate(), InvalidParams);
  quad = {};
  quad.panel_order = 1;
  CHECK_THROWS_AS(quad.validate(), InvalidParams);
}
