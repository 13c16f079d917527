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

#ifndef DARKCELL_CONFIG_HPP
#define DARKCELL_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "darkcell/params.hpp"
#include "darkcell/spectrum.hpp"
#include "darkcell/velocity.hpp"

namespace darkcell {

// Complete run description: physics, distribution, quadrature, grid,
// initial state, execution knobs. Round-trips losslessly through the flat
// key = value text format ('#'-comments, 'auto' markers preserved).
struct RunConfig {
  PhysicalParams params;
  VelocityDistribution dist;
  QuadratureConfig quad;
  GridSpec grid;
  DensityVector sigma0 = density::unpolarized_ground();
  std::string table_file;  // Tabulated distributions: CSV of v,W rows
  unsigned workers = 0;
  std::uint64_t seed = 12345;
  std::string out_dir = "out";

  static RunConfig from_file(const std::string& path);
  static RunConfig from_string(const std::string& text);
  std::string to_string() const;
  void write_file(const std::string& path) const;

  // Key-level access used by the C API; unknown keys throw ParseError.
  void set(const std::string& key, const std::string& value);
  std::string get(const std::string& key) const;
  static const std::vector<std::string>& keys();

  // Loads the tabulated distribution when table_file is set.
  void resolve_table();
  void validate() const;
};

}  // namespace darkcell

#endif  // DARKCELL_CONFIG_HPP
