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

#ifndef DARKCELL_PHI_FUNCTIONS_HPP
#define DARKCELL_PHI_FUNCTIONS_HPP

#include <cmath>
#include <complex>

namespace darkcell {

using Complex = std::complex<double>;

// exp(z) with an analytic flush to zero once the real part is deep in the
// underflow range; avoids useless huge-argument trig reduction for the
// enormous imaginary parts that show up at T = kL/|v_z| with |v_z| -> 0.
inline Complex exp_flushed(Complex z) {
  if (z.real() < -700.0) return {0.0, 0.0};
  return std::exp(z);
}

namespace detail {
// Truncated Taylor series sum_{k>=0} z^k / (k + shift)! for |z| < 0.5;
// 17 terms leave a remainder below 1e-17 at the switch radius.
inline Complex phi_series(Complex z, int shift) {
  double fact = 1.0;
  for (int k = 1; k <= shift; ++k) fact *= k;
  Complex term(1.0 / fact, 0.0);
  Complex sum = term;
  for (int k = 1; k <= 16; ++k) {
    term *= z / static_cast<double>(k + shift);
    sum += term;
  }
  return sum;
}
}  // namespace detail

// phi1(z) = (e^z - 1)/z, phi1(0) = 1.
inline Complex phi1(Complex z) {
  if (std::abs(z) < 0.5) return detail::phi_series(z, 1);
  return (exp_flushed(z) - 1.0) / z;
}

// phi2(z) = (e^z - 1 - z)/z^2, phi2(0) = 1/2.
inline Complex phi2(Complex z) {
  if (std::abs(z) < 0.5) return detail::phi_series(z, 2);
  return (exp_flushed(z) - 1.0 - z) / (z * z);
}

}  // namespace darkcell

#endif  // DARKCELL_PHI_FUNCTIONS_HPP
