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

#include "darkcell/spectrum.hpp"

#include <cmath>

#include "darkcell/errors.hpp"

namespace darkcell {

void GridSpec::validate() const {
  if (!(min_over_gp > 0.0) || !(max_over_gp > min_over_gp))
    throw GridError("grid bounds must satisfy 0 < min < max");
  if (points_per_decade < 1) throw GridError("points_per_decade must be >= 1");
  if (linear_patch_points < 0)
    throw GridError("linear_patch_points must be >= 0");
}

std::vector<double> make_delta_grid(double gamma_p, const GridSpec& grid) {
  grid.validate();
  if (!(gamma_p > 0.0))
    throw GridError("pump rate must be > 0 to scale the grid");

  const int n_geo = static_cast<int>(
      std::lround(std::log10(grid.max_over_gp / grid.min_over_gp) *
                  grid.points_per_decade));
  std::vector<double> pos;
  pos.reserve(n_geo + 1 + grid.linear_patch_points);
  for (int k = 0; k <= n_geo; ++k) {
    const double d =
        grid.min_over_gp *
        std::pow(10.0, static_cast<double>(k) / grid.points_per_decade);
    if (d > grid.max_over_gp * 1.0000001) break;
    pos.push_back(d);
  }
  std::vector<double> patch;
  for (int j = 1; j <= grid.linear_patch_points; ++j)
    patch.push_back(grid.min_over_gp * j / (grid.linear_patch_points + 1));

  std::vector<double> out;
  out.reserve(2 * (pos.size() + patch.size()) + 1);
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) out.push_back(-*it);
  for (auto it = patch.rbegin(); it != patch.rend(); ++it) out.push_back(-*it);
  out.push_back(0.0);
  for (double d : patch) out.push_back(d);
  for (double d : pos) out.push_back(d);
  for (double& d : out) d *= gamma_p;
  return out;
}

}  // namespace darkcell
