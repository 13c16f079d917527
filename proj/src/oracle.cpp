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

#include "darkcell/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "darkcell/bloch.hpp"

namespace darkcell {

void OracleConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !(max_step > 0.0))
    throw InvalidParams("oracle tolerances must be positive");
}

namespace {

// Dormand-Prince 5(4) coefficients (autonomous system: no time nodes).
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                 a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 35.0 / 384 - 5179.0 / 57600,
                 e3 = 500.0 / 1113 - 7571.0 / 16695,
                 e4 = 125.0 / 192 - 393.0 / 640,
                 e5 = -2187.0 / 6784 + 92097.0 / 339200,
                 e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

// Generic adaptive DOPRI5 on an N-dimensional affine system
// ydot = A y + b, integrated from 0 to t_end.
template <int N>
Eigen::Matrix<double, N, 1> dopri5(
    const Eigen::Matrix<double, N, N>& A, const Eigen::Matrix<double, N, 1>& b,
    Eigen::Matrix<double, N, 1> y, double t_end, const OracleConfig& cfg) {
  using Vec = Eigen::Matrix<double, N, 1>;
  cfg.validate();
  if (t_end == 0.0) return y;

  auto rhs = [&](const Vec& s) -> Vec { return A * s + b; };

  double t = 0.0;
  double h = std::min({0.1, t_end, cfg.max_step});
  const double h_floor = t_end * 1e-14;
  Vec k1 = rhs(y);

  while (t < t_end) {
    h = std::min({h, t_end - t, cfg.max_step});
    const Vec k2 = rhs(y + h * (a21 * k1));
    const Vec k3 = rhs(y + h * (a31 * k1 + a32 * k2));
    const Vec k4 = rhs(y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const Vec k5 = rhs(y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const Vec k6 =
        rhs(y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const Vec ynew =
        y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const Vec k7 = rhs(ynew);  // FSAL
    const Vec err =
        h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    double norm2 = 0.0;
    for (int i = 0; i < N; ++i) {
      const double sc =
          cfg.abs_tol +
          cfg.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      const double q = err[i] / sc;
      norm2 += q * q;
    }
    const double err_norm = std::sqrt(norm2 / N);

    if (err_norm <= 1.0) {
      t += h;
      y = ynew;
      k1 = k7;
    }
    const double factor =
        err_norm > 0.0
            ? std::clamp(0.9 * std::pow(err_norm, -0.2), 0.2, 5.0)
            : 5.0;
    h *= factor;
    if (h < h_floor)
      throw StiffnessError("oracle step size underflow (stiffness guard)");
    // unconditionally accepting sub-floor steps would silently lose accuracy
  }
  return y;
}

}  // namespace

DensityVector ode_oracle(const PhysicalParams& p, double v_z,
                         const DensityVector& s0, double t,
                         const OracleConfig& cfg) {
  if (!(t >= 0.0)) throw InvalidParams("time must be non-negative");
  const Liouvillian L = build_liouvillian(p, v_z);
  return dopri5<9>(L.matrix, L.feed_vec, s0, t, cfg);
}

double oracle_path_integral(const PhysicalParams& p, double v_z,
                            const DensityVector& s0,
                            const OracleConfig& cfg) {
  if (!std::isfinite(v_z) || v_z == 0.0)
    throw InvalidParams("path integral needs v_z != 0");
  const Liouvillian L = build_liouvillian(p, v_z);

  Eigen::Matrix<double, 10, 10> A = Eigen::Matrix<double, 10, 10>::Zero();
  A.topLeftCorner<9, 9>() = L.matrix;
  A(9, density::kImEC) = 1.0;  // q' = Im s_eC
  Eigen::Matrix<double, 10, 1> b = Eigen::Matrix<double, 10, 1>::Zero();
  b.head<9>() = L.feed_vec;
  Eigen::Matrix<double, 10, 1> y = Eigen::Matrix<double, 10, 1>::Zero();
  y.head<9>() = s0;

  const double T = p.cell_length / std::abs(v_z);
  return std::abs(v_z) * dopri5<10>(A, b, y, T, cfg)[9];
}

}  // namespace darkcell
