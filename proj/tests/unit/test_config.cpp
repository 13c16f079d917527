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

#include <cstdio>
#include <fstream>

#include "darkcell/config.hpp"

using namespace darkcell;

TEST_CASE("config round-trips losslessly through the text format") {
  RunConfig cfg;
  cfg.params.rabi = 0.0123456789012345;
  cfg.params.ground_relax = 1e-6;
  cfg.params.feed = 3.3e-7;
  cfg.params.cell_length = 12345.6789;
  cfg.dist.kind = DistKind::TruncatedMB;
  cfg.dist.cutoff = 0.07;
  cfg.quad.v_min = 2e-7;
  cfg.quad.nodes_per_decade = 24;
  cfg.grid.points_per_decade = 37;
  cfg.sigma0[0] = 0.25;
  cfg.sigma0[1] = 0.75;
  cfg.workers = 3;
  cfg.seed = 987654321;
  cfg.out_dir = "some/dir";

  const std::string text = cfg.to_string();
  const RunConfig back = RunConfig::from_string(text);
  CHECK(back.to_string() == text);
  CHECK(back.params.feed.has_value());
  CHECK(*back.params.feed == *cfg.params.feed);
  CHECK(back.dist.kind == DistKind::TruncatedMB);
  CHECK(back.quad.v_min == cfg.quad.v_min);
  CHECK(back.sigma0[1] == 0.75);
}

TEST_CASE("auto markers survive the round trip") {
  RunConfig cfg;  // lambda and v_max default to auto
  CHECK(cfg.get("lambda") == "auto");
  CHECK(cfg.get("v_max") == "auto");
  const RunConfig back = RunConfig::from_string(cfg.to_string());
  CHECK(!back.params.feed.has_value());
  CHECK(back.quad.v_max == 0.0);
}

TEST_CASE("comments and blank lines are tolerated") {
  const RunConfig cfg = RunConfig::from_string(
      "# a comment\n\n  omega = 0.02  # trailing\n\nalpha=1\n");
  CHECK(cfg.params.rabi == 0.02);
  CHECK(cfg.params.branching == 1.0);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(RunConfig::from_string("omega 0.02\n"), ParseError);
  CHECK_THROWS_AS(RunConfig::from_string("bogus_key = 1\n"), ParseError);
  CHECK_THROWS_AS(RunConfig::from_string("omega = z\n"), ParseError);
  CHECK_THROWS_AS(RunConfig::from_string("sigma0 = 1,2,3\n"), ParseError);
  CHECK_THROWS_AS(RunConfig::from_string("dist = gauss\n"), ParseError);
  CHECK_THROWS_AS(RunConfig::from_file("/nonexistent/path.cfg"), ParseError);

  RunConfig cfg;
  CHECK_THROWS_AS(cfg.get("nope"), ParseError);
}

TEST_CASE("tabulated distributions load from a table file") {
  const std::string path = "/tmp/darkcell_test_table.csv";
  {
    std::ofstream out(path);
    out << "# v, W\n-2.0, 0.0\n0.0, 1.0\n2.0, 0.0\n";
  }
  RunConfig cfg;
  cfg.set("dist", "tabulated");
  cfg.set("table_file", path);
  cfg.resolve_table();
  CHECK(cfg.dist.table.size() == 3);
  CHECK(cfg.dist.density(1.0) == doctest::Approx(0.5));
  std::remove(path.c_str());

  RunConfig missing;
  missing.set("dist", "tabulated");
  CHECK_THROWS_AS(missing.resolve_table(), ParseError);
}
