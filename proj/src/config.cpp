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

#include "darkcell/config.hpp"

#include <cctype>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace darkcell {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing chars");
    return v;
  } catch (const std::exception&) {
    throw ParseError("config key '" + key + "': cannot parse number '" +
                     value + "'");
  }
}

long long parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing chars");
    return v;
  } catch (const std::exception&) {
    throw ParseError("config key '" + key + "': cannot parse integer '" +
                     value + "'");
  }
}

std::string dist_name(DistKind kind) {
  switch (kind) {
    case DistKind::MaxwellBoltzmann: return "mb";
    case DistKind::TruncatedMB: return "truncated";
    case DistKind::Tabulated: return "tabulated";
  }
  return "mb";
}

}  // namespace

const std::vector<std::string>& RunConfig::keys() {
  static const std::vector<std::string> k = {
      "omega", "alpha", "gamma", "lambda", "delta", "delta_omega", "kl",
      "doppler_width", "dist", "cutoff", "table_file", "v_min", "v_max",
      "nodes_per_decade", "panel_order", "grid_min_over_gp",
      "grid_max_over_gp", "grid_points_per_decade", "grid_linear_patch",
      "sigma0", "workers", "seed", "out",
  };
  return k;
}

void RunConfig::set(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (key == "omega") params.rabi = parse_double(key, v);
  else if (key == "alpha") params.branching = parse_double(key, v);
  else if (key == "gamma") params.ground_relax = parse_double(key, v);
  else if (key == "lambda") {
    if (v == "auto") params.feed.reset();
    else params.feed = parse_double(key, v);
  } else if (key == "delta") params.raman_detuning = parse_double(key, v);
  else if (key == "delta_omega") params.laser_detuning = parse_double(key, v);
  else if (key == "kl") params.cell_length = parse_double(key, v);
  else if (key == "doppler_width") {
    params.doppler_width = parse_double(key, v);
    dist.width = params.doppler_width;
  } else if (key == "dist") {
    if (v == "mb") dist.kind = DistKind::MaxwellBoltzmann;
    else if (v == "truncated") dist.kind = DistKind::TruncatedMB;
    else if (v == "tabulated") dist.kind = DistKind::Tabulated;
    else throw ParseError("config key 'dist': unknown kind '" + v + "'");
  } else if (key == "cutoff") dist.cutoff = parse_double(key, v);
  else if (key == "table_file") table_file = v;
  else if (key == "v_min") quad.v_min = parse_double(key, v);
  else if (key == "v_max") {
    if (v == "auto") quad.v_max = 0.0;
    else quad.v_max = parse_double(key, v);
  } else if (key == "nodes_per_decade")
    quad.nodes_per_decade = static_cast<int>(parse_int(key, v));
  else if (key == "panel_order")
    quad.panel_order = static_cast<int>(parse_int(key, v));
  else if (key == "grid_min_over_gp") grid.min_over_gp = parse_double(key, v);
  else if (key == "grid_max_over_gp") grid.max_over_gp = parse_double(key, v);
  else if (key == "grid_points_per_decade")
    grid.points_per_decade = static_cast<int>(parse_int(key, v));
  else if (key == "grid_linear_patch")
    grid.linear_patch_points = static_cast<int>(parse_int(key, v));
  else if (key == "sigma0") {
    std::stringstream ss(v);
    std::string part;
    int i = 0;
    while (std::getline(ss, part, ',')) {
      if (i >= 9) throw ParseError("sigma0 needs exactly 9 components");
      sigma0[i++] = parse_double(key, trim(part));
    }
    if (i != 9) throw ParseError("sigma0 needs exactly 9 components");
  } else if (key == "workers")
    workers = static_cast<unsigned>(parse_int(key, v));
  else if (key == "seed")
    seed = static_cast<std::uint64_t>(parse_int(key, v));
  else if (key == "out") out_dir = v;
  else throw ParseError("unknown config key '" + key + "'");
}

std::string RunConfig::get(const std::string& key) const {
  if (key == "omega") return fmt(params.rabi);
  if (key == "alpha") return fmt(params.branching);
  if (key == "gamma") return fmt(params.ground_relax);
  if (key == "lambda") return params.feed ? fmt(*params.feed) : "auto";
  if (key == "delta") return fmt(params.raman_detuning);
  if (key == "delta_omega") return fmt(params.laser_detuning);
  if (key == "kl") return fmt(params.cell_length);
  if (key == "doppler_width") return fmt(params.doppler_width);
  if (key == "dist") return dist_name(dist.kind);
  if (key == "cutoff") return fmt(dist.cutoff);
  if (key == "table_file") return table_file;
  if (key == "v_min") return fmt(quad.v_min);
  if (key == "v_max") return quad.v_max == 0.0 ? "auto" : fmt(quad.v_max);
  if (key == "nodes_per_decade") return std::to_string(quad.nodes_per_decade);
  if (key == "panel_order") return std::to_string(quad.panel_order);
  if (key == "grid_min_over_gp") return fmt(grid.min_over_gp);
  if (key == "grid_max_over_gp") return fmt(grid.max_over_gp);
  if (key == "grid_points_per_decade")
    return std::to_string(grid.points_per_decade);
  if (key == "grid_linear_patch")
    return std::to_string(grid.linear_patch_points);
  if (key == "sigma0") {
    std::string s;
    for (int i = 0; i < 9; ++i) {
      if (i) s += ",";
      s += fmt(sigma0[i]);
    }
    return s;
  }
  if (key == "workers") return std::to_string(workers);
  if (key == "seed") return std::to_string(seed);
  if (key == "out") return out_dir;
  throw ParseError("unknown config key '" + key + "'");
}

RunConfig RunConfig::from_string(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("config line " + std::to_string(lineno) +
                       ": expected 'key = value'");
    cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_string(ss.str());
}

std::string RunConfig::to_string() const {
  std::ostringstream out;
  for (const auto& key : keys()) out << key << " = " << get(key) << "\n";
  return out.str();
}

void RunConfig::write_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write config file: " + path);
  out << to_string();
}

void RunConfig::resolve_table() {
  if (dist.kind != DistKind::Tabulated || !dist.table.empty()) return;
  if (table_file.empty())
    throw ParseError("tabulated distribution needs table_file");
  std::ifstream in(table_file);
  if (!in) throw ParseError("cannot open table file: " + table_file);
  std::vector<std::pair<double, double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    double v = 0, w = 0;
    if (std::sscanf(line.c_str(), "%lf,%lf", &v, &w) != 2 &&
        std::sscanf(line.c_str(), "%lf %lf", &v, &w) != 2)
      throw ParseError("table row not parseable: " + line);
    rows.emplace_back(v, w);
  }
  dist = VelocityDistribution::tabulated(std::move(rows));
}

void RunConfig::validate() const {
  params.validate();
  if (dist.kind != DistKind::Tabulated || !dist.table.empty())
    dist.validate();
  quad.validate();
  grid.validate();
  if (!sigma0.allFinite()) throw InvalidParams("sigma0 must be finite");
}

}  // namespace darkcell
