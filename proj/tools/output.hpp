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

#ifndef DARKCELL_TOOLS_OUTPUT_HPP
#define DARKCELL_TOOLS_OUTPUT_HPP

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "darkcell/darkcell.h"

namespace dctool {

// Doubles are printed with %.17g so reruns are byte-identical and values
// round-trip exactly.
inline std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path,
            const std::vector<std::string>& header)
      : out_(path) {
    if (!out_) throw std::runtime_error("cannot write " + path.string());
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) out_ << ',';
      out_ << header[i];
    }
    out_ << '\n';
  }

  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
  }

 private:
  std::ofstream out_;
};

class StatusError : public std::runtime_error {
 public:
  StatusError(dc_status st, const std::string& what,
              const std::string& detail = "")
      : std::runtime_error(detail.empty() ? what : what + ": " + detail),
        status_(st) {}
  dc_status status() const { return status_; }

 private:
  dc_status status_;
};

inline void check(dc_status st, const std::string& what) {
  if (st != DC_OK) throw StatusError(st, what, dc_last_error());
}

// One manifest per command invocation; every output file in the directory
// is listed in exactly this manifest.
class Manifest {
 public:
  Manifest(std::string command, const dc_run* run) : start_(now()) {
    j_["tool"] = "darkcell";
    j_["version"] = dc_version();
    j_["command"] = std::move(command);
    if (run) {
      nlohmann::json cfg;
      const char* keys[] = {
          "omega",   "alpha",   "gamma",      "lambda",      "delta",
          "delta_omega", "kl",  "doppler_width", "dist",     "cutoff",
          "table_file",  "v_min", "v_max",   "nodes_per_decade",
          "panel_order", "grid_min_over_gp", "grid_max_over_gp",
          "grid_points_per_decade", "grid_linear_patch", "sigma0",
          "workers", "seed",    "out"};
      char buf[512];
      for (const char* k : keys) {
        check(dc_run_get(run, k, buf, sizeof(buf)), "read config");
        cfg[k] = buf;
      }
      j_["config"] = cfg;
      double phi = 0, gp = 0, klo = 0, oo = 0;
      check(dc_run_derived(run, &phi, &gp, &klo, &oo), "derived parameters");
      j_["derived"] = {{"phi", phi},
                       {"gamma_p", gp},
                       {"kl_o", klo},
                       {"omega_o_sq", oo}};
    }
    j_["outputs"] = nlohmann::json::array();
  }

  void add_output(const std::string& file, const std::string& type,
                  const nlohmann::json& extra = {}) {
    nlohmann::json o = {{"file", file}, {"type", type}};
    if (!extra.is_null() && !extra.empty()) o["diagnostics"] = extra;
    j_["outputs"].push_back(o);
  }

  void set(const std::string& key, const nlohmann::json& value) {
    j_[key] = value;
  }

  void write(const std::filesystem::path& dir) {
    j_["wall_clock_seconds"] = now() - start_;
    std::ofstream out(dir / "manifest.json");
    if (!out)
      throw std::runtime_error("cannot write " + (dir / "manifest.json").string());
    out << j_.dump(2) << '\n';
  }

 private:
  static double now() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
  }
  nlohmann::json j_;
  double start_;
};

inline nlohmann::json spectrum_diag(const dc_spectrum* sp) {
  double dn = 0, dv = 0;
  dc_spectrum_convergence(sp, &dn, &dv);
  return {{"rel_dev_node_doubling", dn}, {"rel_dev_vmin_halving", dv}};
}

// spectrum.csv with the canonical four columns.
inline void write_spectrum_csv(const std::filesystem::path& path,
                               const dc_spectrum* sp, double gamma_p) {
  CsvWriter csv(path,
                {"delta_over_gamma", "delta_over_gp", "signal", "derivative"});
  const std::size_t n = dc_spectrum_size(sp);
  const double* d = dc_spectrum_delta(sp);
  const double* s = dc_spectrum_signal(sp);
  const double* dv = dc_spectrum_derivative(sp);
  for (std::size_t i = 0; i < n; ++i)
    csv.row({num(d[i]), num(d[i] / gamma_p), num(s[i]), num(dv[i])});
}

}  // namespace dctool

#endif  // DARKCELL_TOOLS_OUTPUT_HPP
