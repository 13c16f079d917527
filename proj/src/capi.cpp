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

#include "darkcell/darkcell.h"

#include <cmath>
#include <cstring>
#include <string>

#include "darkcell/config.hpp"
#include "darkcell/invariance.hpp"
#include "darkcell/lineshape.hpp"
#include "darkcell/scan.hpp"
#include "darkcell/signal.hpp"
#include "darkcell/validation.hpp"
#include "darkcell/version.hpp"

using namespace darkcell;

struct dc_run {
  RunConfig cfg;
};

struct dc_spectrum {
  Spectrum direct;
  std::vector<double> deriv_values;
};

struct dc_scan {
  ScanResult result;
  double gamma_p_base = 0.0;  // for width_pp_over_gp of non-omega2 axes
  ScanAxis axis = ScanAxis::CellLength;
};

namespace {

thread_local std::string g_last_error = "";

dc_status fail(dc_status code, const char* what) {
  g_last_error = what ? what : "unknown error";
  return code;
}

template <typename Fn>
dc_status guarded(Fn&& fn) {
  try {
    fn();
    return DC_OK;
  } catch (const ParseError& e) {
    return fail(DC_EPARSE, e.what());
  } catch (const ConvergenceError& e) {
    return fail(DC_ECONVERGENCE, e.what());
  } catch (const SingularMatrix& e) {
    return fail(DC_ESINGULAR, e.what());
  } catch (const InvalidParams& e) {
    return fail(DC_EINVAL, e.what());
  } catch (const MismatchError& e) {
    return fail(DC_EINVAL, e.what());
  } catch (const GridError& e) {
    return fail(DC_EINVAL, e.what());
  } catch (const FitError& e) {
    return fail(DC_EINVAL, e.what());
  } catch (const std::exception& e) {
    return fail(DC_EINTERNAL, e.what());
  } catch (...) {
    return fail(DC_EINTERNAL, "unknown error");
  }
}

Spectrum make_direct(const RunConfig& cfg, double delta_s, double v_contrib,
                     bool use_v_contrib) {
  RunConfig c = cfg;
  c.resolve_table();
  c.validate();
  const double scale =
      std::max(derived_params(c.params).pump_rate, c.params.ground_relax);
  const auto grid = make_delta_grid(scale, c.grid);
  if (use_v_contrib)
    return velocity_contribution(c.params, c.dist, c.quad, grid, v_contrib,
                                 c.sigma0);
  if (delta_s > 0.0)
    return partial_velocity_signal(c.params, c.dist, c.quad, grid, delta_s,
                                   c.workers, c.sigma0);
  return dark_resonance_signal(c.params, c.dist, c.quad, grid, c.workers,
                               c.sigma0);
}

dc_spectrum* wrap_spectrum(Spectrum&& direct) {
  auto* sp = new dc_spectrum;
  sp->direct = std::move(direct);
  sp->deriv_values = derivative(sp->direct).values;
  return sp;
}

}  // namespace

extern "C" {

const char* dc_version(void) { return DARKCELL_VERSION; }

const char* dc_last_error(void) { return g_last_error.c_str(); }

dc_status dc_run_create(dc_run** out) {
  if (!out) return fail(DC_EINVAL, "out must not be NULL");
  return guarded([&] { *out = new dc_run; });
}

dc_status dc_run_create_from_file(const char* path, dc_run** out) {
  if (!out || !path) return fail(DC_EINVAL, "path/out must not be NULL");
  return guarded([&] { *out = new dc_run{RunConfig::from_file(path)}; });
}

dc_status dc_run_create_from_string(const char* text, dc_run** out) {
  if (!out || !text) return fail(DC_EINVAL, "text/out must not be NULL");
  return guarded([&] { *out = new dc_run{RunConfig::from_string(text)}; });
}

void dc_run_destroy(dc_run* run) { delete run; }

dc_status dc_run_set(dc_run* run, const char* key, const char* value) {
  if (!run || !key || !value) return fail(DC_EINVAL, "NULL argument");
  return guarded([&] { run->cfg.set(key, value); });
}

dc_status dc_run_get(const dc_run* run, const char* key, char* buf,
                     size_t bufsize) {
  if (!run || !key || !buf || bufsize == 0)
    return fail(DC_EINVAL, "NULL argument");
  return guarded([&] {
    const std::string v = run->cfg.get(key);
    if (v.size() + 1 > bufsize) throw InvalidParams("buffer too small");
    std::memcpy(buf, v.c_str(), v.size() + 1);
  });
}

dc_status dc_run_write_file(const dc_run* run, const char* path) {
  if (!run || !path) return fail(DC_EINVAL, "NULL argument");
  return guarded([&] { run->cfg.write_file(path); });
}

dc_status dc_run_derived(const dc_run* run, double* phi, double* gamma_p,
                         double* kl_o, double* omega_o_sq) {
  if (!run) return fail(DC_EINVAL, "run must not be NULL");
  return guarded([&] {
    const DerivedParams d = derived_params(run->cfg.params);
    if (phi) *phi = d.phi;
    if (gamma_p) *gamma_p = d.pump_rate;
    if (kl_o) *kl_o = d.char_length;
    if (omega_o_sq) *omega_o_sq = d.sat_rabi_sq;
  });
}

dc_status dc_compute_spectrum(const dc_run* run, dc_spectrum** out) {
  if (!run || !out) return fail(DC_EINVAL, "NULL argument");
  return guarded(
      [&] { *out = wrap_spectrum(make_direct(run->cfg, 0.0, 0.0, false)); });
}

dc_status dc_compute_partial_spectrum(const dc_run* run, double delta_s,
                                      dc_spectrum** out) {
  if (!run || !out) return fail(DC_EINVAL, "NULL argument");
  if (!(delta_s > 0.0)) return fail(DC_EINVAL, "delta_s must be > 0");
  return guarded([&] {
    *out = wrap_spectrum(make_direct(run->cfg, delta_s, 0.0, false));
  });
}

dc_status dc_compute_velocity_contribution(const dc_run* run, double v_z,
                                           dc_spectrum** out) {
  if (!run || !out) return fail(DC_EINVAL, "NULL argument");
  return guarded(
      [&] { *out = wrap_spectrum(make_direct(run->cfg, 0.0, v_z, true)); });
}

size_t dc_spectrum_size(const dc_spectrum* sp) {
  return sp ? sp->direct.size() : 0;
}

const double* dc_spectrum_delta(const dc_spectrum* sp) {
  return sp ? sp->direct.delta.data() : nullptr;
}

const double* dc_spectrum_signal(const dc_spectrum* sp) {
  return sp ? sp->direct.values.data() : nullptr;
}

const double* dc_spectrum_derivative(const dc_spectrum* sp) {
  return sp ? sp->deriv_values.data() : nullptr;
}

dc_status dc_spectrum_background(const dc_spectrum* sp, double* bg) {
  if (!sp || !bg) return fail(DC_EINVAL, "NULL argument");
  *bg = sp->direct.meta.background;
  return DC_OK;
}

dc_status dc_spectrum_direct_amplitude(const dc_spectrum* sp, double* amp) {
  if (!sp || !amp) return fail(DC_EINVAL, "NULL argument");
  return guarded([&] { *amp = direct_amplitude(sp->direct); });
}

dc_status dc_spectrum_features(const dc_spectrum* sp, double* width_pp,
                               double* amp_pp, double* pos_max,
                               double* pos_min) {
  if (!sp) return fail(DC_EINVAL, "NULL argument");
  return guarded([&] {
    Spectrum deriv = sp->direct;
    deriv.kind = SpectrumKind::Derivative;
    deriv.values = sp->deriv_values;
    const LineshapeFeatures f = extract_features(deriv);
    if (width_pp) *width_pp = f.width_pp;
    if (amp_pp) *amp_pp = f.amp_pp;
    if (pos_max) *pos_max = f.pos_max;
    if (pos_min) *pos_min = f.pos_min;
  });
}

dc_status dc_spectrum_convergence(const dc_spectrum* sp,
                                  double* rel_dev_nodes,
                                  double* rel_dev_vmin) {
  if (!sp) return fail(DC_EINVAL, "NULL argument");
  if (rel_dev_nodes) *rel_dev_nodes = sp->direct.meta.convergence.max_rel_dev_nodes;
  if (rel_dev_vmin) *rel_dev_vmin = sp->direct.meta.convergence.max_rel_dev_vmin;
  return DC_OK;
}

void dc_spectrum_destroy(dc_spectrum* sp) { delete sp; }

dc_status dc_compute_scan(const dc_run* run, const char* axis,
                          const double* values, size_t n, dc_scan** out) {
  if (!run || !axis || !values || !out) return fail(DC_EINVAL, "NULL argument");
  if (n == 0) return fail(DC_EINVAL, "scan needs at least one value");
  return guarded([&] {
    RunConfig c = run->cfg;
    c.resolve_table();
    c.validate();
    auto* sc = new dc_scan;
    sc->axis = parse_scan_axis(axis);
    sc->gamma_p_base = derived_params(c.params).pump_rate;
    sc->result = scan(c.params, c.dist, c.quad, c.grid, sc->axis,
                      std::vector<double>(values, values + n), c.workers);
    *out = sc;
  });
}

size_t dc_scan_size(const dc_scan* sc) {
  return sc ? sc->result.points.size() : 0;
}

dc_status dc_scan_point(const dc_scan* sc, size_t i, double* axis_value,
                        double* width_pp, double* width_pp_over_gp,
                        double* amp_pp, int* ok) {
  if (!sc) return fail(DC_EINVAL, "NULL argument");
  if (i >= sc->result.points.size()) return fail(DC_EINVAL, "index out of range");
  const ScanPoint& pt = sc->result.points[i];
  if (axis_value) *axis_value = pt.axis_value;
  const double nan = std::nan("");
  if (pt.ok() && pt.features) {
    if (width_pp) *width_pp = pt.features->width_pp;
    if (width_pp_over_gp) *width_pp_over_gp = pt.features->width_pp_over_gp;
    if (amp_pp) *amp_pp = pt.features->amp_pp;
  } else {
    if (width_pp) *width_pp = nan;
    if (width_pp_over_gp) *width_pp_over_gp = nan;
    if (amp_pp) *amp_pp = nan;
  }
  if (ok) *ok = pt.ok() ? 1 : 0;
  return DC_OK;
}

dc_status dc_scan_fit(const dc_scan* sc, int which, double range_lo,
                      double range_hi, double* exponent, double* prefactor,
                      double* residual) {
  if (!sc) return fail(DC_EINVAL, "NULL argument");
  return guarded([&] {
    const PowerLawFit fit = which == 0
                                ? fit_width(sc->result, range_lo, range_hi)
                                : fit_amplitude(sc->result, range_lo, range_hi);
    if (exponent) *exponent = fit.exponent;
    if (prefactor) *prefactor = fit.prefactor;
    if (residual) *residual = fit.residual;
  });
}

void dc_scan_destroy(dc_scan* sc) { delete sc; }

dc_status dc_validate_propagator(uint64_t seed, size_t draws,
                                 double* max_abs_err) {
  if (!max_abs_err) return fail(DC_EINVAL, "max_abs_err must not be NULL");
  const dc_status st =
      guarded([&] { *max_abs_err = propagator_oracle_max_error(seed, draws); });
  if (st != DC_OK) return st;
  if (*max_abs_err > 1e-9)
    return fail(DC_ECHECK, "propagator/oracle disagreement above 1e-9");
  return DC_OK;
}

dc_status dc_invariance_deviation(const dc_run* const* runs, size_t n,
                                  double* deviation) {
  if (!runs || !deviation) return fail(DC_EINVAL, "NULL argument");
  if (n < 2) return fail(DC_EINVAL, "need at least two runs");
  return guarded([&] {
    std::vector<PhysicalParams> sets;
    sets.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      if (!runs[i]) throw InvalidParams("NULL run handle");
      sets.push_back(runs[i]->cfg.params);
    }
    const InvarianceReport rep = invariance_harness(
        sets, runs[0]->cfg.quad, runs[0]->cfg.grid, runs[0]->cfg.workers);
    *deviation = rep.absolute_deviation;
  });
}

}  // extern "C"
