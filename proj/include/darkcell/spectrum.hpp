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

#ifndef DARKCELL_SPECTRUM_HPP
#define DARKCELL_SPECTRUM_HPP

#include <optional>
#include <string>
#include <vector>

#include "darkcell/params.hpp"
#include "darkcell/velocity.hpp"

namespace darkcell {

// Raman-detuning grid in units of gamma_p: symmetric geometric decades
// plus a short linear patch through zero, so the line-center cusp is
// always bracketed.
struct GridSpec {
  double min_over_gp = 1e-4;
  double max_over_gp = 1e2;
  int points_per_decade = 40;
  int linear_patch_points = 3;

  void validate() const;
};

// Physical delta grid (in Gamma), strictly increasing, symmetric about 0.
std::vector<double> make_delta_grid(double gamma_p, const GridSpec& grid);

enum class SpectrumKind { Direct, Derivative };

struct ConvergenceDiag {
  double max_rel_dev_nodes = 0.0;  // doubling node density
  double max_rel_dev_vmin = 0.0;   // halving v_min
  bool checked = false;
};

struct SpectrumMeta {
  PhysicalParams params;
  DerivedParams derived{};
  VelocityDistribution dist;
  QuadratureConfig quad;
  double background = 0.0;
  std::optional<double> delta_s;  // partial-velocity integrals only
  ConvergenceDiag convergence;
};

struct Spectrum {
  std::vector<double> delta;   // in Gamma, strictly increasing
  std::vector<double> values;  // signal per grid point
  SpectrumKind kind = SpectrumKind::Direct;
  SpectrumMeta meta;

  std::size_t size() const { return delta.size(); }
  double delta_over_gp(std::size_t i) const {
    return delta[i] / meta.derived.pump_rate;
  }
};

}  // namespace darkcell

#endif  // DARKCELL_SPECTRUM_HPP
