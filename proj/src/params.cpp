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

#include "darkcell/params.hpp"

#include <cmath>
#include <sstream>

namespace darkcell {

namespace {
bool finite(double x) { return std::isfinite(x); }
}  // namespace

std::vector<std::string> PhysicalParams::validate() const {
  std::ostringstream bad;
  if (!finite(rabi) || rabi < 0.0) bad << "rabi must be >= 0; ";
  if (!finite(branching) || branching < 0.0 || branching > 1.0)
    bad << "branching must be in [0,1]; ";
  if (!finite(ground_relax) || ground_relax < 0.0)
    bad << "gamma must be >= 0; ";
  if (feed && (!finite(*feed) || *feed < 0.0)) bad << "lambda must be >= 0; ";
  if (!finite(raman_detuning)) bad << "delta must be finite; ";
  if (!finite(laser_detuning)) bad << "delta_omega must be finite; ";
  if (!finite(cell_length) || cell_length <= 0.0) bad << "kL must be > 0; ";
  if (!finite(doppler_width) || doppler_width <= 0.0)
    bad << "doppler_width must be > 0; ";
  if (!bad.str().empty()) throw InvalidParams("invalid parameters: " + bad.str());

  std::vector<std::string> warnings;
  if (rabi > 0.1)
    warnings.push_back(
        "rabi exceeds 0.1 Gamma; the weak-field (Omega << Gamma) regime "
        "this model targets no longer applies");
  return warnings;
}

DerivedParams derived_params(const PhysicalParams& p) {
  p.validate();
  DerivedParams d;
  d.pump_rate = p.rabi * p.rabi;
  d.phi = d.pump_rate * p.cell_length;
  d.char_length = p.rabi > 0.0
                      ? 1.0 / d.pump_rate
                      : std::numeric_limits<double>::infinity();
  d.sat_rabi_sq = 1.0 / p.cell_length;
  return d;
}

namespace density {

DensityVector unpolarized_ground() {
  DensityVector s = DensityVector::Zero();
  s[kPopD] = 0.5;
  s[kPopC] = 0.5;
  return s;
}

double trace(const DensityVector& s) {
  return s[kPopD] + s[kPopC] + s[kPopE];
}

Eigen::Matrix3cd to_matrix(const DensityVector& s) {
  using std::complex;
  Eigen::Matrix3cd rho;
  const complex<double> eD(s[kReED], s[kImED]);
  const complex<double> eC(s[kReEC], s[kImEC]);
  const complex<double> DC(s[kReDC], s[kImDC]);
  rho(0, 0) = s[kPopD];
  rho(1, 1) = s[kPopC];
  rho(2, 2) = s[kPopE];
  rho(0, 1) = DC;
  rho(1, 0) = std::conj(DC);
  rho(2, 0) = eD;
  rho(0, 2) = std::conj(eD);
  rho(2, 1) = eC;
  rho(1, 2) = std::conj(eC);
  return rho;
}

double min_eigenvalue(const DensityVector& s) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> es(to_matrix(s));
  return es.eigenvalues().minCoeff();
}

bool is_physical(const DensityVector& s, double eps) {
  for (int i : {kPopD, kPopC, kPopE}) {
    if (s[i] < -eps || s[i] > 1.0 + eps) return false;
  }
  if (trace(s) > 1.0 + eps) return false;
  return min_eigenvalue(s) >= -eps;
}

}  // namespace density

}  // namespace darkcell
