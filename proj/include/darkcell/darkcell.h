/*
 * Copyright 2026 the darkcell authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the darkcell simulation core.
 *
 * Dark-resonance (coherent-population-trapping) spectra of a three-level
 * Lambda system in a thin vapor cell: wall-to-wall transient evolution,
 * Doppler velocity averaging, lineshape feature extraction and parameter
 * scans. All rates are in units of the excited-state width Gamma, lengths
 * as k*L, velocities in Gamma/k.
 *
 * Every function returns a dc_status; on failure dc_last_error() carries a
 * human-readable message for the calling thread. Objects returned through
 * out-parameters are owned by the caller and released with the matching
 * *_destroy function.
 */

#ifndef DARKCELL_DARKCELL_H
#define DARKCELL_DARKCELL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DC_API __declspec(dllexport)
#else
#define DC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dc_status {
  DC_OK = 0,
  DC_EINVAL = 1,       /* invalid argument or parameter set */
  DC_EPARSE = 2,       /* config text could not be parsed */
  DC_ECONVERGENCE = 3, /* quadrature refinement gate failed */
  DC_ECHECK = 4,       /* a requested verification check failed */
  DC_ESINGULAR = 5,    /* singular Liouvillian (steady state at gamma = 0) */
  DC_EINTERNAL = 6
} dc_status;

/* Opaque handles. */
typedef struct dc_run dc_run;           /* a full run configuration */
typedef struct dc_spectrum dc_spectrum; /* sampled signal vs Raman detuning */
typedef struct dc_scan dc_scan;         /* feature curves vs a swept axis */

DC_API const char* dc_version(void);

/* Message for the last failing call on this thread; never NULL. */
DC_API const char* dc_last_error(void);

/* ---- run configuration ------------------------------------------------ */

DC_API dc_status dc_run_create(dc_run** out);
DC_API dc_status dc_run_create_from_file(const char* path, dc_run** out);
DC_API dc_status dc_run_create_from_string(const char* text, dc_run** out);
DC_API void dc_run_destroy(dc_run* run);

/* Keys are the flat config-file keys (omega, alpha, gamma, lambda, delta,
 * delta_omega, kl, doppler_width, dist, cutoff, table_file, v_min, v_max,
 * nodes_per_decade, panel_order, grid_min_over_gp, grid_max_over_gp,
 * grid_points_per_decade, grid_linear_patch, sigma0, workers, seed, out). */
DC_API dc_status dc_run_set(dc_run* run, const char* key, const char* value);
DC_API dc_status dc_run_get(const dc_run* run, const char* key, char* buf,
                            size_t bufsize);
DC_API dc_status dc_run_write_file(const dc_run* run, const char* path);

/* phi, gamma_p, kL_o, Omega_o^2; any out pointer may be NULL. */
DC_API dc_status dc_run_derived(const dc_run* run, double* phi,
                                double* gamma_p, double* kl_o,
                                double* omega_o_sq);

/* ---- spectra ----------------------------------------------------------- */

/* Dark-resonance spectrum on the configured grid; the derivative with
 * respect to the Raman detuning is computed alongside. */
DC_API dc_status dc_compute_spectrum(const dc_run* run, dc_spectrum** out);

/* Velocity integral restricted to |v_z| < delta_s. */
DC_API dc_status dc_compute_partial_spectrum(const dc_run* run,
                                             double delta_s,
                                             dc_spectrum** out);

/* Background-subtracted contribution of a single velocity class. */
DC_API dc_status dc_compute_velocity_contribution(const dc_run* run,
                                                  double v_z,
                                                  dc_spectrum** out);

DC_API size_t dc_spectrum_size(const dc_spectrum* sp);
DC_API const double* dc_spectrum_delta(const dc_spectrum* sp);
DC_API const double* dc_spectrum_signal(const dc_spectrum* sp);
DC_API const double* dc_spectrum_derivative(const dc_spectrum* sp);
DC_API dc_status dc_spectrum_background(const dc_spectrum* sp, double* bg);

/* max - min of the direct signal over the grid. */
DC_API dc_status dc_spectrum_direct_amplitude(const dc_spectrum* sp,
                                              double* amp);

/* Peak-to-peak width (Gamma units) and amplitude of the derivative, with
 * extrema positions; any out pointer may be NULL. */
DC_API dc_status dc_spectrum_features(const dc_spectrum* sp, double* width_pp,
                                      double* amp_pp, double* pos_max,
                                      double* pos_min);

/* Relative signal change under quadrature refinement (diagnostics). */
DC_API dc_status dc_spectrum_convergence(const dc_spectrum* sp,
                                         double* rel_dev_nodes,
                                         double* rel_dev_vmin);

DC_API void dc_spectrum_destroy(dc_spectrum* sp);

/* ---- scans ------------------------------------------------------------- */

/* axis: one of "kL", "omega2", "alpha", "gamma", "delta_omega", "v_c". */
DC_API dc_status dc_compute_scan(const dc_run* run, const char* axis,
                                 const double* values, size_t n,
                                 dc_scan** out);

DC_API size_t dc_scan_size(const dc_scan* sc);

/* ok is 0 when the point failed (width/amp are NaN then). */
DC_API dc_status dc_scan_point(const dc_scan* sc, size_t i,
                               double* axis_value, double* width_pp,
                               double* width_pp_over_gp, double* amp_pp,
                               int* ok);

/* Log-log power-law fit of width (which = 0) or amplitude (which = 1)
 * against the axis over [range_lo, range_hi]. */
DC_API dc_status dc_scan_fit(const dc_scan* sc, int which, double range_lo,
                             double range_hi, double* exponent,
                             double* prefactor, double* residual);

DC_API void dc_scan_destroy(dc_scan* sc);

/* ---- validation -------------------------------------------------------- */

/* Cross-checks the closed-form propagator against an adaptive ODE
 * integration on `draws` random parameter/time draws; reports the largest
 * state difference. DC_ECHECK when it exceeds 1e-9. */
DC_API dc_status dc_validate_propagator(uint64_t seed, size_t draws,
                                        double* max_abs_err);

/* Dimensionless-invariance harness: all runs must share
 * (phi, gamma/gamma_p, alpha, Delta_D); reports the maximal pointwise
 * deviation of the spectra relative to the first run's peak scale. */
DC_API dc_status dc_invariance_deviation(const dc_run* const* runs, size_t n,
                                         double* deviation);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DARKCELL_DARKCELL_H */
