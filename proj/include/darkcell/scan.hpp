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

#ifndef DARKCELL_SCAN_HPP
#define DARKCELL_SCAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "darkcell/lineshape.hpp"
#include "darkcell/signal.hpp"

namespace darkcell {

enum class ScanAxis {
  CellLength,     // kL
  RabiSq,         // Omega^2
  Branching,      // alpha
  GroundRelax,    // gamma (feed follows unless pinned)
  LaserDetuning,  // delta_omega
  Cutoff,         // v_c of a truncated distribution
};

ScanAxis parse_scan_axis(const std::string& name);
std::string scan_axis_name(ScanAxis axis);

struct ScanPoint {
  double axis_value = 0.0;
  std::optional<LineshapeFeatures> features;
  double direct_amplitude = 0.0;
  std::string error;  // empty on success

  bool ok() const { return error.empty(); }
};

struct ScanResult {
  ScanAxis axis = ScanAxis::CellLength;
  std::vector<ScanPoint> points;
  std::optional<PowerLawFit> fit;
};

// dark_resonance_signal -> derivative -> extract_features per axis value.
// Per-point failures are recorded and the scan continues.
ScanResult scan(const PhysicalParams& base, const VelocityDistribution& dist,
                const QuadratureConfig& quad, const GridSpec& grid,
                ScanAxis axis, const std::vector<double>& values,
                unsigned workers = 0);

// Fit helpers over a scan: x = axis value, y = width or amplitude.
PowerLawFit fit_width(const ScanResult& scan, double range_lo,
                      double range_hi);
PowerLawFit fit_amplitude(const ScanResult& scan, double range_lo,
                          double range_hi);

}  // namespace darkcell

#endif  // DARKCELL_SCAN_HPP
