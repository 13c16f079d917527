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

#include "darkcell/invariance.hpp"

#include <cmath>
#include <sstream>

namespace darkcell {

namespace {

double rel_diff(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

}  // namespace

InvarianceReport invariance_harness(const std::vector<PhysicalParams>& sets,
                                    const QuadratureConfig& quad,
                                    const GridSpec& grid, unsigned workers) {
  if (sets.size() < 2)
    throw InvalidParams("invariance harness needs at least two parameter sets");

  const DerivedParams ref = derived_params(sets.front());
  const double ref_ratio =
      sets.front().ground_relax / ref.pump_rate;  // gamma / gamma_p
  for (const auto& p : sets) {
    const DerivedParams d = derived_params(p);
    std::ostringstream why;
    if (rel_diff(d.phi, ref.phi) > 1e-9) why << "phi differs; ";
    if (rel_diff(p.ground_relax / d.pump_rate, ref_ratio) > 1e-9)
      why << "gamma/gamma_p differs; ";
    if (p.branching != sets.front().branching) why << "alpha differs; ";
    if (p.doppler_width != sets.front().doppler_width)
      why << "Doppler width differs; ";
    if (!why.str().empty())
      throw MismatchError("dimensionless parameters not shared: " + why.str());
  }

  InvarianceReport report;
  const VelocityDistribution dist =
      VelocityDistribution::maxwell(sets.front().doppler_width);
  for (const auto& p : sets) {
    const auto delta_grid = make_delta_grid(derived_params(p).pump_rate, grid);
    report.spectra.push_back(
        dark_resonance_signal(p, dist, quad, delta_grid, workers));
  }

  const auto& ref_spec = report.spectra.front();
  double scale = 1e-300;
  for (double v : ref_spec.values) scale = std::max(scale, std::abs(v));

  for (std::size_t k = 1; k < report.spectra.size(); ++k) {
    const auto& s = report.spectra[k];
    double amp = 1e-300;
    for (double v : s.values) amp = std::max(amp, std::abs(v));
    for (std::size_t i = 0; i < s.values.size(); ++i) {
      report.absolute_deviation =
          std::max(report.absolute_deviation,
                   std::abs(s.values[i] - ref_spec.values[i]) / scale);
      report.shape_deviation =
          std::max(report.shape_deviation,
                   std::abs(s.values[i] / amp - ref_spec.values[i] / scale));
    }
  }
  return report;
}

}  // namespace darkcell
