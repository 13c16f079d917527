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

#include "darkcell/propagator.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>

#include "darkcell/phi_functions.hpp"

namespace darkcell {

namespace {

using Matrix9cd = Eigen::Matrix<std::complex<double>, 9, 9>;
using Vector9cd = Eigen::Vector<std::complex<double>, 9>;

double one_norm(const Matrix9cd& A) {
  return A.cwiseAbs().colwise().sum().maxCoeff();
}

void check_state(const DensityVector& s0) {
  if (!s0.allFinite()) throw InvalidParams("state vector must be finite");
}

}  // namespace

Propagator::Propagator(const Liouvillian& liou) : liou_(liou) {
  if (!liou_.matrix.allFinite() || !liou_.feed_vec.allFinite())
    throw InvalidParams("Liouvillian must be finite");

  Eigen::EigenSolver<Eigen::Matrix<double, 9, 9>> es(liou_.matrix);
  if (es.info() == Eigen::Success) {
    V_ = es.eigenvectors();
    eval_ = es.eigenvalues();
    // the generator is contractive (Re <= 0 exactly); real parts at the
    // solver noise floor are zeros, and leaving them finite would leak
    // exp(noise * t) drifts into conserved quantities at large t
    const double noise = std::max(1e-14, 20.0 * 2.23e-16 * one_norm(
                                             liou_.matrix.cast<std::complex<double>>()));
    for (int i = 0; i < 9; ++i) {
      double re = eval_[i].real();
      re = std::abs(re) < noise ? 0.0 : std::min(re, 0.0);
      eval_[i] = {re, eval_[i].imag()};
    }
    Eigen::FullPivLU<Matrix9cd> lu(V_);
    if (lu.isInvertible()) {
      Vinv_ = lu.inverse();
      cond_ = one_norm(V_) * one_norm(Vinv_);
      eigen_ok_ = cond_ <= kConditionLimit && Vinv_.allFinite();
    }
  }
  if (eigen_ok_) {
    const Vector9cd f = liou_.feed_vec.cast<std::complex<double>>();
    feed_modes_ = Vinv_ * f;
    feed_modes_ += Vinv_ * (f - V_ * feed_modes_);
  }
}

// Mode coordinates with one step of iterative refinement; keeps the
// decomposition residual near roundoff even for mildly ill-conditioned
// eigenbases.
Eigen::Vector<std::complex<double>, 9> Propagator::to_modes(
    const DensityVector& x) const {
  const Vector9cd xc = x.cast<std::complex<double>>();
  Vector9cd u = Vinv_ * xc;
  u += Vinv_ * (xc - V_ * u);
  return u;
}

DensityVector Propagator::evolve(const DensityVector& s0, double t) const {
  check_state(s0);
  if (!(t >= 0.0)) throw InvalidParams("time must be non-negative");
  if (!eigen_ok_) return evolve_fallback(s0, t);

  const Vector9cd u0 = to_modes(s0);
  Vector9cd w;
  for (int i = 0; i < 9; ++i) {
    const Complex z = eval_[i] * t;
    w[i] = exp_flushed(z) * u0[i] + t * phi1(z) * feed_modes_[i];
  }
  return (V_ * w).real();
}

DensityVector Propagator::integrated_state(const DensityVector& s0,
                                           double T) const {
  check_state(s0);
  if (!(T >= 0.0)) throw InvalidParams("time must be non-negative");
  if (!eigen_ok_) return integrated_fallback(s0, T);

  const Vector9cd u0 = to_modes(s0);
  Vector9cd w;
  for (int i = 0; i < 9; ++i) {
    const Complex z = eval_[i] * T;
    w[i] = T * phi1(z) * u0[i] + T * T * phi2(z) * feed_modes_[i];
  }
  return (V_ * w).real();
}

DensityVector Propagator::time_average(const DensityVector& s0,
                                       double T) const {
  if (!(T > 0.0)) throw InvalidParams("averaging window must be positive");
  return integrated_state(s0, T) / T;
}

DensityVector Propagator::evolve_fallback(const DensityVector& s0,
                                          double t) const {
  Eigen::Matrix<double, 10, 10> aug = Eigen::Matrix<double, 10, 10>::Zero();
  aug.topLeftCorner<9, 9>() = liou_.matrix * t;
  aug.block<9, 1>(0, 9) = liou_.feed_vec * t;
  const Eigen::Matrix<double, 10, 10> E = aug.exp();
  return E.topLeftCorner<9, 9>() * s0 + E.block<9, 1>(0, 9);
}

DensityVector Propagator::integrated_fallback(const DensityVector& s0,
                                              double T) const {
  // exp of [[M*T, w2, w1], [0, 0, 1], [0, 0, 0]] puts
  // phi1(MT) w1 + phi2(MT) w2 in the last column.
  // computed as the time average (entries O(1)), then scaled by T, so the
  // augmented matrix never mixes wildly different magnitudes
  Eigen::Matrix<double, 11, 11> aug = Eigen::Matrix<double, 11, 11>::Zero();
  aug.topLeftCorner<9, 9>() = liou_.matrix * T;
  aug.block<9, 1>(0, 9) = liou_.feed_vec * T;
  aug.block<9, 1>(0, 10) = s0;
  aug(9, 10) = 1.0;
  const Eigen::Matrix<double, 11, 11> E = aug.exp();
  return T * E.block<9, 1>(0, 10);
}

DensityVector evolve(const Liouvillian& liou, const DensityVector& s0,
                     double t) {
  return Propagator(liou).evolve(s0, t);
}

DensityVector steady_state(const Liouvillian& liou) {
  // M = M0 - gamma*I with Re(eig(M0)) <= 0, so gamma > 0 guarantees
  // invertibility; at gamma = 0 the system has neutral directions.
  if (liou.matrix(density::kReDC, density::kReDC) >= 0.0)
    throw SingularMatrix("steady state requires gamma > 0");

  Eigen::PartialPivLU<Eigen::Matrix<double, 9, 9>> lu(liou.matrix);
  DensityVector s = lu.solve(-liou.feed_vec);
  // one step of iterative refinement keeps the residual at roundoff
  DensityVector r = -liou.feed_vec - liou.matrix * s;
  s += lu.solve(r);
  return s;
}

double path_integrated_coherence(const PhysicalParams& p, double v_z,
                                 const DensityVector& s0, double v_min) {
  if (!std::isfinite(v_z) || std::abs(v_z) < v_min)
    throw InvalidParams(
        "velocity below the resolved minimum; use the v -> 0 limit path");
  const Propagator prop(build_liouvillian(p, v_z));
  const double T = p.cell_length / std::abs(v_z);
  return std::abs(v_z) * prop.integrated_state(s0, T)[density::kImEC];
}

SlowEigenvalues slow_eigenvalues(const PhysicalParams& p, double v_z,
                                 int count) {
  if (count < 1 || count > 9)
    throw InvalidParams("slow eigenvalue count must be in [1, 9]");
  SlowEigenvalues out;
  if (p.rabi > 0.1)
    out.warnings.push_back("perturbative regime assumes Omega << Gamma");
  if (p.rabi > 0.0 && std::abs(p.raman_detuning) > 0.1 * p.rabi)
    out.warnings.push_back("perturbative regime assumes delta << Omega");

  const Liouvillian L = build_liouvillian(p, v_z);
  Eigen::EigenSolver<Eigen::Matrix<double, 9, 9>> es(L.matrix);
  if (es.info() != Eigen::Success)
    throw Error("eigenvalue computation failed");
  std::vector<std::complex<double>> ev(es.eigenvalues().data(),
                                       es.eigenvalues().data() + 9);
  std::sort(ev.begin(), ev.end(), [](const auto& a, const auto& b) {
    const double ra = std::abs(a.real()), rb = std::abs(b.real());
    if (ra != rb) return ra < rb;
    return std::abs(a.imag()) < std::abs(b.imag());
  });
  ev.resize(count);
  out.values = std::move(ev);
  return out;
}

}  // namespace darkcell
