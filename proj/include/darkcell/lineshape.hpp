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

#ifndef DARKCELL_LINESHAPE_HPP
#define DARKCELL_LINESHAPE_HPP

#include <string>
#include <vector>

#include "darkcell/spectrum.hpp"

namespace darkcell {

// Central finite differences on the (non-uniform) grid; one-sided at the
// ends. Throws GridError when the innermost nonzero grid points carry the
// global extrema (under-resolved line-center cusp; refine the grid).
Spectrum derivative(const Spectrum& spec);

struct LineshapeFeatures {
  double width_pp = 0.0;         // Delta_pp in Gamma
  double width_pp_over_gp = 0.0;
  double amp_pp = 0.0;           // max - min of the derivative
  double pos_max = 0.0;          // delta of the maximum, in Gamma
  double pos_min = 0.0;
  std::vector<std::string> warnings;
};

// Peak-to-peak width and amplitude from a derivative spectrum; grid scan
// plus local quadratic refinement. Warns when secondary extrema within
// 10 % of the global ones exist (non-unimodal wings).
LineshapeFeatures extract_features(const Spectrum& deriv);

// max - min of a direct spectrum over its grid.
double direct_amplitude(const Spectrum& spec);

struct PowerLawFit {
  double exponent = 0.0;   // slope in log-log space: y ~ x^exponent
  double prefactor = 0.0;
  double residual = 0.0;   // RMS of log-space deviations over the range
  double range_lo = 0.0;
  double range_hi = 0.0;
  int n_points = 0;
};

// Least squares on (log x, log y) restricted to [range_lo, range_hi].
// Throws FitError on fewer than 4 usable points or non-positive features.
PowerLawFit fit_power_law(const std::vector<double>& x,
                          const std::vector<double>& y, double range_lo,
                          double range_hi);

}  // namespace darkcell

#endif  // DARKCELL_LINESHAPE_HPP
