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

#include "darkcell/scan.hpp"

#include <cmath>

namespace darkcell {

ScanAxis parse_scan_axis(const std::string& name) {
  if (name == "kL" || name == "kl") return ScanAxis::CellLength;
  if (name == "omega2") return ScanAxis::RabiSq;
  if (name == "alpha") return ScanAxis::Branching;
  if (name == "gamma") return ScanAxis::GroundRelax;
  if (name == "delta_omega") return ScanAxis::LaserDetuning;
  if (name == "v_c") return ScanAxis::Cutoff;
  throw InvalidParams("unknown scan axis: " + name);
}

std::string scan_axis_name(ScanAxis axis) {
  switch (axis) {
    case ScanAxis::CellLength: return "kL";
    case ScanAxis::RabiSq: return "omega2";
    case ScanAxis::Branching: return "alpha";
    case ScanAxis::GroundRelax: return "gamma";
    case ScanAxis::LaserDetuning: return "delta_omega";
    case ScanAxis::Cutoff: return "v_c";
  }
  return "?";
}

namespace {

void apply_axis(ScanAxis axis, double value, PhysicalParams& p,
                VelocityDistribution& dist) {
  switch (axis) {
    case ScanAxis::CellLength:
      p.cell_length = value;
      break;
    case ScanAxis::RabiSq:
      if (!(value >= 0.0)) throw InvalidParams("omega2 must be >= 0");
      p.rabi = std::sqrt(value);
      break;
    case ScanAxis::Branching:
      p.branching = value;
      break;
    case ScanAxis::GroundRelax:
      p.ground_relax = value;  // feed tracks gamma/2 unless pinned
      break;
    case ScanAxis::LaserDetuning:
      p.laser_detuning = value;
      break;
    case ScanAxis::Cutoff:
      if (!(value >= 0.0)) throw InvalidParams("v_c must be >= 0");
      dist.kind = value > 0.0 ? DistKind::TruncatedMB
                              : DistKind::MaxwellBoltzmann;
      dist.cutoff = value;
      break;
  }
}

}  // namespace

ScanResult scan(const PhysicalParams& base, const VelocityDistribution& dist,
                const QuadratureConfig& quad, const GridSpec& grid,
                ScanAxis axis, const std::vector<double>& values,
                unsigned workers) {
  for (std::size_t i = 1; i < values.size(); ++i)
    if (!(values[i] > values[i - 1]))
      throw InvalidParams("scan values must be strictly increasing");

  ScanResult result;
  result.axis = axis;
  result.points.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    ScanPoint& pt = result.points[i];
    pt.axis_value = values[i];
    try {
      PhysicalParams p = base;
      VelocityDistribution d = dist;
      apply_axis(axis, values[i], p, d);
      // the Raman lineshape lives on the decoherence-broadened scale
      const double scale =
          std::max(derived_params(p).pump_rate, p.ground_relax);
      const auto delta_grid = make_delta_grid(scale, grid);
      const Spectrum direct =
          dark_resonance_signal(p, d, quad, delta_grid, workers);
      pt.direct_amplitude = direct_amplitude(direct);
      pt.features = extract_features(derivative(direct));
    } catch (const std::exception& e) {
      pt.error = e.what();
    }
  }
  return result;
}

namespace {

PowerLawFit fit_feature(const ScanResult& sc, double lo, double hi,
                        bool width) {
  std::vector<double> x, y;
  for (const auto& pt : sc.points) {
    if (!pt.ok() || !pt.features) continue;
    x.push_back(pt.axis_value);
    y.push_back(width ? pt.features->width_pp : pt.features->amp_pp);
  }
  return fit_power_law(x, y, lo, hi);
}

}  // namespace

PowerLawFit fit_width(const ScanResult& sc, double lo, double hi) {
  return fit_feature(sc, lo, hi, true);
}

PowerLawFit fit_amplitude(const ScanResult& sc, double lo, double hi) {
  return fit_feature(sc, lo, hi, false);
}

}  // namespace darkcell
