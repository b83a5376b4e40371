// Copyright 2026 The steklov-shells Authors
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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "steklov/steklov.h"

namespace steklov_cli {

namespace {

// A precondition or library failure; reported on stderr, exit code 1.
class Failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(stk_status status, const std::string& context) {
  if (status != STK_OK) throw Failure(context + ": " + stk_last_error());
}

std::string num(double x) {
  char buf[64];
  stk_format_number(x, buf, sizeof buf);
  return buf;
}

struct Settings {
  std::string config;
  std::string family;
  int dim = 0;
  double r1 = 0.0;
  double r2 = 0.0;
  double d = 0.0;
  double x = 0.0;
  std::optional<double> tol;
  int lmax = 5;
  double ode_step = 0.0;
  int steps = 17;
  std::vector<double> d_values;
  std::string out_path;
  bool json = false;
  bool flags = false;
  int threads = 1;
  int basis = 24;
  int scan = 200;
  std::string trace_path;
  std::uint64_t seed = 42;
  bool fast = false;
};

using SpacePtr = std::unique_ptr<stk_space, decltype(&stk_space_destroy)>;

SpacePtr make_space(const Settings& s) {
  stk_space* raw = nullptr;
  check(stk_space_create(s.family.c_str(), s.dim, &raw), "--space " + s.family + " --dim " + std::to_string(s.dim));
  return {raw, &stk_space_destroy};
}

stk_quad_config quad_config(const Settings& s) {
  stk_quad_config cfg = stk_quad_config_default();
  if (s.tol) cfg.rel_tol = *s.tol;
  return cfg;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Failure("cannot open " + path + " for writing");
  file << text;
  file.flush();
  if (!file) throw Failure("failed writing " + path);
}

std::string take_string(char* text) {
  std::string out(text);
  stk_string_free(text);
  return out;
}

int cmd_sigma1(const Settings& s, std::ostream& out) {
  const auto space = make_space(s);
  const auto cfg = quad_config(s);
  double sigma = 0.0;
  check(stk_sigma1_concentric(space.get(), s.r1, s.r2, &cfg, &sigma), "sigma1");
  out << num(sigma) << '\n';
  return 0;
}

int cmd_modes(const Settings& s, std::ostream& out) {
  const auto space = make_space(s);
  std::vector<double> sigmas(static_cast<std::size_t>(std::max(s.lmax, 0)) + 1);
  int first = 0;
  int increasing = 0;
  check(stk_mode_ordering(space.get(), s.r1, s.r2, s.lmax, s.ode_step, sigmas.data(), &first,
                          &increasing),
        "modes");
  out << "l,sigma\n";
  for (std::size_t l = 0; l < sigmas.size(); ++l) out << l << ',' << num(sigmas[l]) << '\n';
  return 0;
}

int cmd_sweep(const Settings& s, std::ostream& out, std::ostream& err) {
  const auto space = make_space(s);
  const auto cfg = quad_config(s);
  std::vector<double> grid = s.d_values;
  if (grid.empty()) {
    grid.resize(static_cast<std::size_t>(std::max(s.steps, 0)));
    check(stk_default_d_grid(s.r1, s.r2, s.steps, grid.data()), "--steps");
  }
  for (double d : grid) {
    if (!(d >= 0.0 && d + s.r1 < s.r2))
      throw Failure("--d value " + num(d) + " must satisfy 0 <= d < R2 - R1");
  }

  stk_sweep* raw = nullptr;
  check(stk_sweep_run(space.get(), s.r1, s.r2, grid.data(), grid.size(), &cfg, s.threads, &raw),
        "sweep");
  const std::unique_ptr<stk_sweep, decltype(&stk_sweep_destroy)> sweep(raw, &stk_sweep_destroy);

  int failed = 0;
  for (std::size_t i = 0; i < stk_sweep_size(sweep.get()); ++i) {
    stk_record rec;
    const char* message = nullptr;
    if (stk_sweep_record(sweep.get(), i, &rec, &message) != STK_OK) {
      ++failed;
      err << "sweep: d=" << num(grid[i]) << " failed: " << (message ? message : "") << '\n';
    }
  }
  if (failed == static_cast<int>(grid.size())) throw Failure("sweep: every displacement failed");

  const stk_format format = s.json ? STK_FORMAT_JSON : STK_FORMAT_CSV;
  if (!s.out_path.empty()) {
    check(stk_sweep_write(sweep.get(), s.out_path.c_str(), format, s.flags), "--out");
  } else {
    char* text = nullptr;
    check(stk_sweep_render(sweep.get(), format, s.flags, &text), "sweep");
    out << take_string(text);
  }
  if (s.flags) {
    stk_sweep_flags f;
    check(stk_sweep_get_flags(sweep.get(), &f), "sweep");
    err << "flags: complete=" << f.complete << " d_increasing=" << f.d_increasing
        << " n_bounded=" << f.n_bounded << " q_bounded=" << f.q_bounded
        << " q_monotone=" << f.q_monotone << '\n';
  }
  return failed ? 1 : 0;
}

int cmd_newton(const Settings& s, std::ostream& out) {
  const auto space = make_space(s);
  const auto cfg = quad_config(s);
  double residual = 0.0;
  check(stk_newton_residual(space.get(), s.r2, s.x, &cfg, &residual), "newton");
  out << num(residual) << '\n';
  return 0;
}

int cmd_mps(const Settings& s, std::ostream& out, std::ostream& err) {
  stk_mps_config cfg = stk_mps_config_default();
  cfg.basis_order = s.basis;
  cfg.scan_points = s.scan;
  cfg.threads = s.threads;
  stk_mps_result* raw = nullptr;
  const stk_status status = stk_mps_solve(s.r1, s.r2, s.d, &cfg, &raw);
  const std::string message = status == STK_OK ? "" : stk_last_error();
  const std::unique_ptr<stk_mps_result, decltype(&stk_mps_result_destroy)> result(
      raw, &stk_mps_result_destroy);
  if (result && !s.trace_path.empty()) {
    char* text = nullptr;
    check(stk_mps_render_trace(result.get(), &text), "--trace");
    write_text(s.trace_path, take_string(text));
  }
  if (status != STK_OK) throw Failure("mps: " + message);

  stk_mps_summary summary;
  check(stk_mps_get_summary(result.get(), &summary), "mps");
  if (summary.ill_conditioned)
    err << "mps: warning: basis column norms span a ratio of " << num(summary.column_norm_ratio)
        << '\n';
  out << num(summary.sigma) << '\n';
  return 0;
}

int cmd_verify(const Settings& s, std::ostream& out, std::ostream& err) {
  stk_verify_options opt = stk_verify_options_default();
  opt.seed = s.seed;
  opt.fast = s.fast;
  opt.threads = s.threads;
  char* text = nullptr;
  int all_passed = 0;
  check(stk_verify(&opt, &text, &all_passed), "verify");
  const std::string report = take_string(text);
  if (s.out_path.empty()) {
    out << report;
  } else {
    write_text(s.out_path, report);
  }
  if (!all_passed) {
    err << "verify: at least one check failed\n";
    return 2;
  }
  return 0;
}

// Flat key=value lines; blank lines and lines starting with '#' are skipped.
struct ConfigEntry {
  int line;
  std::string key;
  std::string value;
};

std::vector<ConfigEntry> read_config(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Failure("--config: cannot read " + path);
  std::vector<ConfigEntry> entries;
  std::string line;
  for (int number = 1; std::getline(file, line); ++number) {
    const auto trim = [](std::string v) {
      const auto b = v.find_first_not_of(" \t\r");
      const auto e = v.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Failure(path + ":" + std::to_string(number) + ": expected key=value");
    entries.push_back({number, trim(line.substr(0, eq)), trim(line.substr(eq + 1))});
    if (entries.back().key.empty())
      throw Failure(path + ":" + std::to_string(number) + ": empty key");
  }
  return entries;
}

std::optional<std::string> config_path(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return std::nullopt;
}

bool given(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == flag || a.rfind(flag + "=", 0) == 0;
  });
}

// Appends config entries that the command line does not already set.
std::vector<std::string> merge_config(CLI::App& app, std::vector<std::string> args) {
  const auto path = config_path(args);
  if (!path) return args;
  CLI::App* target = nullptr;
  for (CLI::App* sub : app.get_subcommands({}))
    if (!args.empty() && sub->check_name(args.front())) target = sub;
  if (!target) throw Failure("--config needs a subcommand first");

  const auto entries = read_config(*path);
  for (const auto& [line, key, value] : entries) {
    const std::string where = *path + ":" + std::to_string(line);
    const std::string flag = "--" + key;
    const CLI::Option* opt = target->get_option_no_throw(flag);
    if (!opt || key == "config")
      throw Failure(where + ": key '" + key + "' is not an option of " + target->get_name());
    if (given(args, flag)) continue;
    if (opt->get_expected_min() == 0) {
      if (value == "true" || value == "1") args.push_back(flag);
      else if (value != "false" && value != "0")
        throw Failure(where + ": key '" + key + "' expects true or false");
    } else {
      args.push_back(flag + "=" + value);
    }
  }
  return args;
}

void add_space_options(CLI::App* sub, Settings& s) {
  sub->add_option("--space", s.family, "euclidean, sphere, rp, cp, hp, op2, rh, ch, hh or oh2")
      ->required();
  sub->add_option("--dim", s.dim, "m for euclidean/sphere, n for the other families")->required();
  sub->add_option("--tol", s.tol, "relative quadrature tolerance")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Steklov eigenvalue bounds for shells in two-point homogeneous spaces", "steklov"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto* sigma1 = app.add_subcommand("sigma1", "first eigenvalue of a concentric shell");
  add_space_options(sigma1, s);
  sigma1->add_option("--r1", s.r1, "inner radius")->required();
  sigma1->add_option("--r2", s.r2, "outer radius")->required();

  auto* modes = app.add_subcommand("modes", "eigenvalues of the radial modes l = 0..lmax");
  add_space_options(modes, s);
  modes->add_option("--r1", s.r1)->required();
  modes->add_option("--r2", s.r2)->required();
  modes->add_option("--lmax", s.lmax, "highest mode")->check(CLI::NonNegativeNumber);
  modes->add_option("--ode-step", s.ode_step, "RK4 step (default (R2-R1)/4096)");

  auto* sweep = app.add_subcommand("sweep", "shell functionals over displacements of the inner ball");
  add_space_options(sweep, s);
  sweep->add_option("--r1", s.r1)->required();
  sweep->add_option("--r2", s.r2)->required();
  auto* steps = sweep->add_option("--steps", s.steps, "uniform grid on [0, 0.95 (R2 - R1)]")
                    ->check(CLI::PositiveNumber);
  sweep->add_option("--d", s.d_values, "explicit displacements")->delimiter(',')->excludes(steps);
  sweep->add_option("--out", s.out_path, "write records to this file");
  sweep->add_flag("--json", s.json, "JSON array instead of CSV");
  sweep->add_flag("--flags", s.flags, "append per-row comparison flags and print a summary");
  sweep->add_option("--threads", s.threads)->check(CLI::PositiveNumber);

  auto* newton = app.add_subcommand("newton", "axial field of a uniform shell at an interior point");
  add_space_options(newton, s);
  newton->add_option("--r2", s.r2, "shell radius")->required();
  newton->add_option("--x", s.x, "distance of the point from the center")->required();

  auto* mps = app.add_subcommand("mps", "first eigenvalue of the planar eccentric annulus");
  mps->add_option("--r1", s.r1)->required();
  mps->add_option("--r2", s.r2)->required();
  mps->add_option("--d", s.d, "center offset")->required();
  mps->add_option("--basis", s.basis, "harmonic terms per center");
  mps->add_option("--scan", s.scan, "scan points over the sigma bracket");
  mps->add_option("--trace", s.trace_path, "write the scan as CSV");
  mps->add_option("--threads", s.threads)->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run the property checks");
  verify->add_option("--seed", s.seed, "seed for sampled checks");
  verify->add_flag("--fast", s.fast, "coarser grids");
  verify->add_option("--out", s.out_path, "write the report to this file");
  verify->add_option("--threads", s.threads)->check(CLI::PositiveNumber);

  for (CLI::App* sub : app.get_subcommands({}))
    sub->add_option("--config", s.config, "key=value file; command-line flags win");

  try {
    const auto args = merge_config(app, raw_args);
    std::vector<const char*> argv = {"steklov"};
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const auto chosen = app.get_subcommands();
    out << (chosen.empty() ? app.help() : chosen.front()->help());
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  } catch (const Failure& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (sigma1->parsed()) return cmd_sigma1(s, out);
    if (modes->parsed()) return cmd_modes(s, out);
    if (sweep->parsed()) return cmd_sweep(s, out, err);
    if (newton->parsed()) return cmd_newton(s, out);
    if (mps->parsed()) return cmd_mps(s, out, err);
    if (verify->parsed()) return cmd_verify(s, out, err);
  } catch (const Failure& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace steklov_cli
