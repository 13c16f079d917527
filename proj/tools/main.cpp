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

// Command-line front end; talks to the simulation core exclusively through
// the C API in darkcell/darkcell.h.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "figures.hpp"
#include "output.hpp"

namespace fs = std::filesystem;
using dctool::check;
using dctool::CsvWriter;
using dctool::Manifest;
using dctool::num;
using dctool::StatusError;

namespace {

// Exit codes: 0 ok, 2 config error, 3 numerical non-convergence,
// 4 check failure (reproduce/validate).
int exit_code(dc_status st) {
  switch (st) {
    case DC_OK: return 0;
    case DC_EPARSE:
    case DC_EINVAL: return 2;
    case DC_ECONVERGENCE: return 3;
    case DC_ECHECK: return 4;
    default: return 1;
  }
}

struct RunPtr {
  dc_run* h = nullptr;
  ~RunPtr() { dc_run_destroy(h); }
};

void load_config(RunPtr& run, const std::string& config_path,
                 const std::optional<std::string>& out_dir,
                 const std::optional<unsigned>& workers) {
  if (config_path.empty()) {
    check(dc_run_create(&run.h), "default config");
  } else {
    check(dc_run_create_from_file(config_path.c_str(), &run.h),
          "load config " + config_path);
  }
  if (out_dir) check(dc_run_set(run.h, "out", out_dir->c_str()), "set out");
  if (workers)
    check(dc_run_set(run.h, "workers", std::to_string(*workers).c_str()),
          "set workers");
}

fs::path resolve_out(const RunPtr& run) {
  char buf[512];
  check(dc_run_get(run.h, "out", buf, sizeof(buf)), "read out dir");
  fs::path dir(buf);
  fs::create_directories(dir);
  return dir;
}

double gamma_p_of(const RunPtr& run) {
  double gp = 0;
  check(dc_run_derived(run.h, nullptr, &gp, nullptr, nullptr), "derived");
  return gp;
}

int cmd_spectrum(const std::string& config, std::optional<std::string> out,
                 std::optional<unsigned> workers) {
  RunPtr run;
  load_config(run, config, out, workers);
  const fs::path dir = resolve_out(run);

  dc_spectrum* sp = nullptr;
  check(dc_compute_spectrum(run.h, &sp), "compute spectrum");
  std::unique_ptr<dc_spectrum, decltype(&dc_spectrum_destroy)> guard(
      sp, dc_spectrum_destroy);

  Manifest manifest("spectrum", run.h);
  dctool::write_spectrum_csv(dir / "spectrum.csv", sp, gamma_p_of(run));
  manifest.add_output("spectrum.csv", "spectrum", dctool::spectrum_diag(sp));

  double w = 0, a = 0;
  check(dc_spectrum_features(sp, &w, &a, nullptr, nullptr), "features");
  manifest.set("features",
               {{"width_pp", w},
                {"width_pp_over_gp", w / gamma_p_of(run)},
                {"amp_pp", a}});
  manifest.write(dir);
  std::printf("spectrum: %zu points, width_pp/gamma_p = %s -> %s\n",
              dc_spectrum_size(sp), num(w / gamma_p_of(run)).c_str(),
              (dir / "spectrum.csv").c_str());
  return 0;
}

int cmd_scan(const std::string& config, std::optional<std::string> out,
             std::optional<unsigned> workers, const std::string& axis,
             const std::vector<double>& values,
             const std::vector<double>& fit_range) {
  if (values.empty())
    throw StatusError(DC_EINVAL, "scan needs --values");
  RunPtr run;
  load_config(run, config, out, workers);
  const fs::path dir = resolve_out(run);

  dc_scan* sc = nullptr;
  check(dc_compute_scan(run.h, axis.c_str(), values.data(), values.size(),
                        &sc),
        "compute scan");
  std::unique_ptr<dc_scan, decltype(&dc_scan_destroy)> guard(sc,
                                                             dc_scan_destroy);

  Manifest manifest("scan " + axis, run.h);
  CsvWriter csv(dir / "scan.csv",
                {"axis_value", "width_pp_over_gp", "amp_pp", "status"});
  for (std::size_t i = 0; i < dc_scan_size(sc); ++i) {
    double x = 0, wgp = 0, a = 0;
    int ok = 0;
    check(dc_scan_point(sc, i, &x, nullptr, &wgp, &a, &ok), "scan point");
    csv.row({num(x), num(wgp), num(a), ok ? "ok" : "error"});
  }
  manifest.add_output("scan.csv", "scan");

  if (values.size() >= 4) {
    const double lo = fit_range.size() == 2 ? fit_range[0] : values.front();
    const double hi = fit_range.size() == 2 ? fit_range[1] : values.back();
    double expnt = 0, pref = 0, res = 0;
    const dc_status st = dc_scan_fit(sc, 0, lo, hi, &expnt, &pref, &res);
    if (st == DC_OK) {
      manifest.set("fit", {{"feature", "width_pp"},
                           {"exponent", expnt},
                           {"prefactor", pref},
                           {"log_rms_residual", res},
                           {"range", {lo, hi}}});
      std::printf("scan: width ~ %s^%s over [%s, %s]\n", axis.c_str(),
                  num(expnt).c_str(), num(lo).c_str(), num(hi).c_str());
    }
  }
  manifest.write(dir);
  std::printf("scan: %zu points -> %s\n", dc_scan_size(sc),
              (dir / "scan.csv").c_str());
  return 0;
}

int cmd_velocity_select(const std::string& config,
                        std::optional<std::string> out,
                        std::optional<unsigned> workers,
                        std::vector<double> ds_values) {
  RunPtr run;
  load_config(run, config, out, workers);
  const fs::path dir = resolve_out(run);
  if (ds_values.empty())
    for (double e = -4.0; e <= 1.0 + 1e-9; e += 0.25)
      ds_values.push_back(std::pow(10.0, e));

  dc_spectrum* full = nullptr;
  check(dc_compute_spectrum(run.h, &full), "full spectrum");
  std::unique_ptr<dc_spectrum, decltype(&dc_spectrum_destroy)> fguard(
      full, dc_spectrum_destroy);
  double full_w = 0, full_a = 0, full_da = 0;
  check(dc_spectrum_features(full, &full_w, &full_a, nullptr, nullptr),
        "features");
  check(dc_spectrum_direct_amplitude(full, &full_da), "direct amplitude");

  Manifest manifest("velocity-select", run.h);
  CsvWriter csv(dir / "velocity_select.csv",
                {"delta_s", "direct_amp", "direct_frac", "deriv_amp",
                 "deriv_frac"});
  for (double ds : ds_values) {
    dc_spectrum* part = nullptr;
    check(dc_compute_partial_spectrum(run.h, ds, &part), "partial spectrum");
    std::unique_ptr<dc_spectrum, decltype(&dc_spectrum_destroy)> pguard(
        part, dc_spectrum_destroy);
    double w = 0, a = 0, da = 0;
    check(dc_spectrum_features(part, &w, &a, nullptr, nullptr), "features");
    check(dc_spectrum_direct_amplitude(part, &da), "direct amplitude");
    csv.row({num(ds), num(da), num(da / full_da), num(a), num(a / full_a)});
  }
  manifest.add_output("velocity_select.csv", "velocity-select");
  manifest.write(dir);
  std::printf("velocity-select: %zu thresholds -> %s\n", ds_values.size(),
              (dir / "velocity_select.csv").c_str());
  return 0;
}

int cmd_reproduce(const std::string& id, std::optional<std::string> out,
                  std::optional<unsigned> workers) {
  const fs::path dir = out ? fs::path(*out) / id : fs::path("out") / id;
  std::printf("reproduce %s -> %s\n", id.c_str(), dir.c_str());
  const bool ok =
      dctool::run_figure(id, dir, workers.value_or(0));
  std::printf("reproduce %s: %s\n", id.c_str(), ok ? "PASS" : "FAIL");
  return ok ? 0 : 4;
}

int cmd_validate(const std::string& config, std::optional<unsigned> workers,
                 std::uint64_t seed, std::size_t draws) {
  bool all_ok = true;
  auto report = [&](const std::string& name, bool ok,
                    const std::string& detail) {
    std::printf("[%s] %s: %s\n", ok ? "PASS" : "FAIL", name.c_str(),
                detail.c_str());
    all_ok &= ok;
  };

  double max_err = 0;
  const dc_status st = dc_validate_propagator(seed, draws, &max_err);
  if (st != DC_OK && st != DC_ECHECK) throw StatusError(st, "validate");
  report("propagator vs ODE oracle", st == DC_OK,
         num(max_err) + " max state difference over " +
             std::to_string(draws) + " draws (gate 1e-9)");

  // parity and determinism on a small spectrum through the public surface
  RunPtr run;
  load_config(run, config, std::nullopt, workers);
  check(dc_run_set(run.h, "grid_points_per_decade", "12"), "grid");
  check(dc_run_set(run.h, "grid_max_over_gp", "10"), "grid");
  check(dc_run_set(run.h, "delta_omega", "0"), "resonant");

  auto compute = [&](const char* workers_value) {
    check(dc_run_set(run.h, "workers", workers_value), "workers");
    dc_spectrum* sp = nullptr;
    check(dc_compute_spectrum(run.h, &sp), "spectrum");
    return std::unique_ptr<dc_spectrum, decltype(&dc_spectrum_destroy)>(
        sp, dc_spectrum_destroy);
  };
  auto one = compute("1");
  auto two = compute("2");

  const std::size_t n = dc_spectrum_size(one.get());
  const double* d = dc_spectrum_delta(one.get());
  const double* s1 = dc_spectrum_signal(one.get());
  const double* s2 = dc_spectrum_signal(two.get());
  double scale = 1e-300, asym = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(s1[i]));
  for (std::size_t i = 0, j = n - 1; i < j; ++i, --j) {
    if (d[i] != -d[j]) continue;
    asym = std::max(asym, std::abs(s1[i] - s1[j]) / scale);
  }
  report("spectrum parity at resonance", asym <= 1e-8,
         num(asym) + " relative asymmetry (gate 1e-8)");

  bool identical = true;
  for (std::size_t i = 0; i < n; ++i) identical &= s1[i] == s2[i];
  report("worker-count independence", identical,
         identical ? "bit-identical signals for 1 and 2 workers"
                   : "signals differ between worker counts");

  // configuration round trip through the text format
  const fs::path cfg_path =
      fs::temp_directory_path() / "darkcell_validate_roundtrip.cfg";
  check(dc_run_write_file(run.h, cfg_path.c_str()), "write config");
  dc_run* reread = nullptr;
  check(dc_run_create_from_file(cfg_path.c_str(), &reread), "reread config");
  bool same = true;
  const char* keys[] = {"omega", "alpha", "gamma", "lambda", "kl",
                        "doppler_width", "v_min", "sigma0", "seed"};
  for (const char* key : keys) {
    char a[512], b[512];
    check(dc_run_get(run.h, key, a, sizeof(a)), "get");
    check(dc_run_get(reread, key, b, sizeof(b)), "get");
    same &= std::string(a) == b;
  }
  dc_run_destroy(reread);
  fs::remove(cfg_path);
  report("config round trip", same,
         same ? "all keys identical after write/read"
              : "keys changed across the text format");

  return all_ok ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dark-resonance spectra in thin vapor cells"};
  app.set_version_flag("--version", dc_version());
  app.require_subcommand(1);

  std::string config, axis, figure_id;
  std::optional<std::string> out;
  std::optional<unsigned> workers;
  std::vector<double> values, fit_range, ds_values;
  std::uint64_t seed = 20260811;
  std::size_t draws = 1000;

  auto add_common = [&](CLI::App* cmd, bool needs_config) {
    if (needs_config)
      cmd->add_option("--config", config, "run configuration file");
    cmd->add_option("--out", out, "output directory (overrides config)");
    cmd->add_option("--workers", workers,
                    "worker threads (0 = hardware; results identical)");
  };

  auto* sp = app.add_subcommand("spectrum", "dark-resonance spectrum");
  add_common(sp, true);

  auto* sc = app.add_subcommand("scan", "sweep a parameter axis");
  add_common(sc, true);
  sc->add_option("--axis", axis,
                 "kL | omega2 | alpha | gamma | delta_omega | v_c")
      ->required();
  sc->add_option("--values", values, "axis values (ascending)")
      ->required()
      ->delimiter(',');
  sc->add_option("--fit", fit_range, "fit range lo,hi")->delimiter(',');

  auto* vs = app.add_subcommand("velocity-select",
                                "partial velocity integrals vs delta_s");
  add_common(vs, true);
  vs->add_option("--ds", ds_values, "delta_s thresholds")->delimiter(',');

  auto* rp = app.add_subcommand("reproduce", "run a bundled study");
  rp->add_option("id", figure_id, "fig2 ... fig11")->required();
  add_common(rp, false);

  auto* va = app.add_subcommand("validate", "cross-checks and properties");
  add_common(va, true);
  va->add_option("--seed", seed, "random seed");
  va->add_option("--draws", draws, "number of random draws");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sp->parsed()) return cmd_spectrum(config, out, workers);
    if (sc->parsed())
      return cmd_scan(config, out, workers, axis, values, fit_range);
    if (vs->parsed())
      return cmd_velocity_select(config, out, workers, ds_values);
    if (rp->parsed()) return cmd_reproduce(figure_id, out, workers);
    if (va->parsed()) return cmd_validate(config, workers, seed, draws);
  } catch (const StatusError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code(e.status());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
