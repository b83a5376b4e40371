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

#include "steklov/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "steklov/error.hpp"
#include "steklov/geodesic_trig.hpp"
#include "steklov/model_space.hpp"
#include "steklov/mps2d.hpp"
#include "steklov/radial.hpp"
#include "steklov/records.hpp"
#include "steklov/shell_functionals.hpp"

namespace steklov {

namespace {

struct ShellCase {
  Family family;
  int dim;
  double r1;
  double r2;
};

// Constant-curvature shells spanning the four families and m = 2, 3, 4.
const std::vector<ShellCase>& shell_cases() {
  static const std::vector<ShellCase> cases = {
      {Family::Euclidean, 2, 1.0, 2.0},      {Family::Euclidean, 3, 1.0, 2.0},
      {Family::Euclidean, 4, 0.5, 1.5},      {Family::Sphere, 2, 0.3, 1.2},
      {Family::Sphere, 3, 0.2, 1.0},         {Family::Sphere, 4, 0.4, 1.4},
      {Family::RealProjective, 2, 0.1, 0.7}, {Family::RealProjective, 3, 0.2, 0.75},
      {Family::RealProjective, 4, 0.3, 0.7}, {Family::RealHyperbolic, 2, 0.5, 1.5},
      {Family::RealHyperbolic, 3, 0.3, 2.0}, {Family::RealHyperbolic, 4, 1.0, 2.5},
  };
  return cases;
}

std::string label(const ModelSpace& s, double r1, double r2) {
  std::ostringstream os;
  os << s.name() << s.m() << "(" << format_number(r1) << " " << format_number(r2) << ")";
  return os.str();
}

double rel_err(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }

struct Outcome {
  bool passed = true;
  std::string detail;
};

// Keeps the worst value of a metric plus the first failing case.
class Tally {
 public:
  void observe(double metric, bool ok, const std::string& where) {
    if (metric > worst_) worst_ = metric;
    ++count_;
    if (!ok && failure_.empty()) failure_ = where;
  }
  void fail(const std::string& where) {
    ++count_;
    if (failure_.empty()) failure_ = where;
  }
  // `metric_name` empty: no worst-value field. `extra` is appended verbatim.
  Outcome outcome(const std::string& metric_name = {}, const std::string& extra = {}) const {
    std::ostringstream os;
    os << "cases=" << count_;
    if (!metric_name.empty()) os << " " << metric_name << "=" << format_number(worst_);
    if (!extra.empty()) os << " " << extra;
    if (!failure_.empty()) os << " first_failure=" << failure_;
    return {failure_.empty(), os.str()};
  }

 private:
  double worst_ = 0.0;
  int count_ = 0;
  std::string failure_;
};

Outcome closed_form_sigma1() {
  struct Case {
    Family f;
    int dim;
    double r1, r2, exact;
  };
  const double e = std::numbers::e;
  const std::vector<Case> cases = {
      {Family::Euclidean, 3, 1.0, 2.0, 0.5},
      {Family::Euclidean, 2, 1.0, e, 1.0 / e},
      {Family::Euclidean, 4, 0.5, 1.5, 2.0 * 0.25 / (1.5 * (1.5 * 1.5 - 0.25))},
      // a(r) = log(tan(r/2) / tan(R1/2)) on S^2, log(tanh(r/2) / tanh(R1/2)) on H^2
      {Family::Sphere, 2, 0.3, 1.2, 1.0 / (std::sin(1.2) * std::log(std::tan(0.6) / std::tan(0.15)))},
      {Family::RealHyperbolic, 2, 0.5, 1.5,
       1.0 / (std::sinh(1.5) * std::log(std::tanh(0.75) / std::tanh(0.25)))},
  };
  Tally t;
  for (const auto& c : cases) {
    const auto space = ModelSpace::make(c.f, c.dim);
    const double err = rel_err(sigma1_concentric(space, c.r1, c.r2), c.exact);
    t.observe(err, err < 1e-10, label(space, c.r1, c.r2));
  }
  return t.outcome("max_rel_err");
}

Outcome rayleigh_at_zero(const QuadratureConfig& cfg) {
  Tally t;
  for (const auto& c : shell_cases()) {
    const auto space = ModelSpace::make(c.family, c.dim);
    const auto rec = rayleigh_Q(ShellGeometry::make(space, c.r1, c.r2, 0.0), cfg);
    const double err = rel_err(rec.Q, sigma1_concentric(space, c.r1, c.r2, cfg));
    t.observe(err, err < 1e-10, label(space, c.r1, c.r2));
  }
  return t.outcome("max_rel_err");
}

struct SweepCase {
  ModelSpace space;
  SweepResult result;
};

std::vector<SweepCase> run_sweeps(const VerifyOptions& opt, const QuadratureConfig& cfg) {
  std::vector<SweepCase> out;
  const int steps = opt.fast ? 5 : 17;
  for (const auto& c : shell_cases()) {
    const auto space = ModelSpace::make(c.family, c.dim);
    const auto base = ShellGeometry::make(space, c.r1, c.r2, 0.0);
    const auto grid = default_d_grid(c.r1, c.r2, steps);
    out.push_back({space, sweep(base, grid, cfg, opt.threads)});
  }
  // Outer radius beyond a quarter of the injectivity radius on the 2-sphere.
  const auto s2 = ModelSpace::make(Family::Sphere, 2);
  const std::vector<double> grid = {0.0, 0.2, 0.5, 0.9};
  out.push_back({s2, sweep(ShellGeometry::make(s2, 0.2, 1.3, 0.0), grid, cfg, opt.threads)});
  return out;
}

std::string sweep_label(const SweepCase& s) {
  return label(s.space, s.result.base.r1(), s.result.base.r2());
}

Outcome boundary_measure_pushforward(const std::vector<SweepCase>& sweeps) {
  Tally t;
  for (const auto& s : sweeps) {
    for (const auto& e : s.result.entries) {
      if (!e.record) {
        t.fail(sweep_label(s) + " d=" + format_number(e.d) + " error");
        continue;
      }
      const double err = rel_err(e.record->D_alt, e.record->D);
      t.observe(err, err < 1e-8, sweep_label(s) + " d=" + format_number(e.d));
    }
  }
  return t.outcome("max_rel_diff");
}

Outcome sweep_flag(const std::vector<SweepCase>& sweeps, bool SweepFlags::*flag) {
  int bad = 0;
  std::string first;
  for (const auto& s : sweeps) {
    const bool ok = s.result.flags.complete && s.result.flags.*flag;
    if (!ok && bad++ == 0) first = sweep_label(s);
  }
  std::ostringstream os;
  os << "sweeps=" << sweeps.size() << " failing=" << bad;
  if (bad) os << " first_failure=" << first;
  return {bad == 0, os.str()};
}

// Worst strict gap relative to the reference value, to show the margin.
Outcome rayleigh_upper_bound(const std::vector<SweepCase>& sweeps) {
  Outcome o = sweep_flag(sweeps, &SweepFlags::q_bounded);
  double smallest_gap = std::numeric_limits<double>::infinity();
  for (const auto& s : sweeps)
    for (const auto& e : s.result.entries)
      if (e.record && e.d > 0.0)
        smallest_gap = std::min(smallest_gap, (s.result.reference.Q - e.record->Q) / s.result.reference.Q);
  o.detail += " min_rel_gap=" + format_number(smallest_gap);
  return o;
}

Outcome shell_zero_field(const VerifyOptions& opt, const QuadratureConfig& cfg) {
  std::mt19937_64 rng(opt.seed);
  const Family families[] = {Family::Euclidean, Family::Sphere, Family::RealProjective,
                             Family::RealHyperbolic};
  std::uniform_int_distribution<int> pick_family(0, 3);
  std::uniform_int_distribution<int> pick_dim(2, 4);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Tally t;
  for (int i = 0; i < 50; ++i) {
    const Family family = families[pick_family(rng)];
    const auto space = ModelSpace::make(family, pick_dim(rng));
    const auto bound = max_outer_radius(space);
    const double r_top = 0.95 * (bound.bounded() ? std::min(bound.value(), 3.0) : 3.0);
    const double r2 = 0.05 + (r_top - 0.05) * unit(rng);
    const double x = 0.9 * r2 * unit(rng);
    const double res = std::abs(newton_shell_residual(space, r2, x, cfg));
    t.observe(res, res < 1e-8,
              std::string(space.name()) + std::to_string(space.m()) + " R2=" + format_number(r2) +
                  " x=" + format_number(x));
  }
  return t.outcome("max_abs_residual");
}

Outcome acute_angle_sampling(const VerifyOptions& opt) {
  const int samples = opt.fast ? 2000 : 20000;
  Tally t;
  for (Curvature k : {Curvature::Hyperbolic, Curvature::Flat, Curvature::Spherical}) {
    const bool ok = acute_angle_check(k, samples, opt.seed);
    t.observe(0.0, ok, "kappa=" + std::to_string(static_cast<int>(k)));
  }
  return t.outcome();
}

Outcome chord_symmetry(const VerifyOptions& opt) {
  struct Case {
    Curvature k;
    double d, r2;
  };
  const std::vector<Case> cases = {
      {Curvature::Flat, 0.5, 1.0},        {Curvature::Flat, 0.95, 1.0},
      {Curvature::Spherical, 0.3, 1.2},   {Curvature::Spherical, 1.4, 1.5},
      {Curvature::Hyperbolic, 0.8, 1.5},  {Curvature::Hyperbolic, 2.0, 3.0},
  };
  const int samples = opt.fast ? 500 : 5000;
  Tally t;
  for (const auto& c : cases) {
    const bool ok = chord_symmetry_check(c.k, c.d, c.r2, samples, opt.seed);
    t.observe(0.0, ok,
              "kappa=" + std::to_string(static_cast<int>(c.k)) + " d=" + format_number(c.d) +
                  " R2=" + format_number(c.r2));
  }
  return t.outcome();
}

Outcome cap_measure_check() {
  Tally t;
  double worst_ratio = 0.0;
  for (int m : {2, 3}) {
    const auto space = ModelSpace::make(Family::Sphere, m);
    for (double r2 : {0.5, 1.0, 1.3, 1.5}) {
      for (double df : {0.2, 0.6, 0.95}) {
        const double d = df * r2;
        for (double sf : {0.25, 0.5, 1.0}) {
          const auto cmp = cap_measure_compare(space, r2, d, sf * d);
          worst_ratio = std::max(worst_ratio, cmp.left / cmp.right);
          t.observe(0.0, cmp.ok,
                    "S" + std::to_string(m) + " R2=" + format_number(r2) + " d=" + format_number(d) +
                        " s=" + format_number(sf * d));
        }
      }
    }
  }
  return t.outcome({}, "max_left_over_right=" + format_number(worst_ratio));
}

Outcome density_asymmetry() {
  struct Case {
    Family f;
    int dim;
    double r2;
  };
  const std::vector<Case> cases = {
      {Family::Sphere, 2, 1.2},
      {Family::Sphere, 3, 1.2},
      {Family::Sphere, 4, 1.2},
      {Family::Sphere, 5, 1.2},
      {Family::RealProjective, 3, 0.7},
      {Family::ComplexProjective, 2, 0.7},
      {Family::ComplexProjective, 3, 0.7},
      {Family::QuaternionicProjective, 2, 0.7},
      {Family::OctonionicProjective, 2, 0.7},
      {Family::RealHyperbolic, 3, 1.5},
      {Family::ComplexHyperbolic, 2, 1.5},
  };
  Tally t;
  for (const auto& c : cases) {
    const auto space = ModelSpace::make(c.f, c.dim);
    std::vector<double> grid(100);
    for (int i = 0; i < 100; ++i) grid[i] = c.r2 * (i + 1) / 101.0;
    t.observe(0.0, omega_asymmetry(space, c.r2, grid),
              std::string(space.name()) + std::to_string(c.dim));
  }
  return t.outcome();
}

// Euclidean closed form: a(r) = r^l - R1^(2l+m-2) r^(2-m-l).
double euclidean_mode(int m, double r1, double r2, int l) {
  const double p = l;
  const double q = 2.0 - m - l;
  const double c = std::pow(r1, p - q);
  const double a = std::pow(r2, p) - c * std::pow(r2, q);
  const double da = p * std::pow(r2, p - 1) - c * q * std::pow(r2, q - 1);
  if (m == 2 && l == 0) return 1.0 / (r2 * std::log(r2 / r1));
  return da / a;
}

Outcome mode_ordering(const VerifyOptions& opt) {
  Tally t;
  double worst_err = 0.0;
  for (int m : {2, 3, 4}) {
    const double r1 = m == 4 ? 0.5 : 1.0;
    const double r2 = m == 4 ? 1.5 : 2.0;
    const auto space = ModelSpace::make(Family::Euclidean, m);
    for (int l = 0; l <= 5; ++l) {
      const double err = rel_err(radial_mode(space, r1, r2, l).steklov_ratio(),
                                 euclidean_mode(m, r1, r2, l));
      worst_err = std::max(worst_err, err);
      t.observe(err, err < 1e-8, label(space, r1, r2) + " l=" + std::to_string(l));
    }
  }
  const auto& cases = shell_cases();
  for (std::size_t i = 0; i < cases.size(); i += opt.fast ? 3 : 1) {
    const auto& c = cases[i];
    const auto space = ModelSpace::make(c.family, c.dim);
    const auto ord = mode_ordering_check(space, c.r1, c.r2, 5);
    t.observe(0.0, ord.first_is_smallest && ord.strictly_increasing, label(space, c.r1, c.r2));
  }
  return t.outcome({}, "max_closed_form_rel_err=" + format_number(worst_err));
}

MpsConfig mps_config(const VerifyOptions& opt, int basis = 24) {
  MpsConfig cfg;
  cfg.basis_order = basis;
  cfg.threads = opt.threads;
  return cfg;
}

Outcome mps_concentric(const VerifyOptions& opt) {
  std::vector<std::pair<double, double>> pairs = {
      {1.0, 2.0}, {1.0, 1.5}, {0.5, 2.0}, {1.0, 3.0}, {0.3, 1.0}};
  if (opt.fast) pairs.resize(2);
  Tally t;
  for (const auto& [r1, r2] : pairs) {
    const double sigma = solve_eccentric(r1, r2, 0.0, mps_config(opt)).sigma;
    const double err = std::abs(sigma - concentric_planar_sigma(r1, r2));
    t.observe(err, err < 1e-6, "R1=" + format_number(r1) + " R2=" + format_number(r2));
  }
  return t.outcome("max_abs_err");
}

Outcome mps_sandwich(const VerifyOptions& opt, const QuadratureConfig& qcfg) {
  const auto plane = ModelSpace::make(Family::Euclidean, 2);
  const double at_zero = solve_eccentric(1.0, 2.0, 0.0, mps_config(opt)).sigma;
  Tally t;
  double tightest = std::numeric_limits<double>::infinity();
  for (double d : {0.1, 0.3, 0.5}) {
    const double sigma = solve_eccentric(1.0, 2.0, d, mps_config(opt)).sigma;
    const double q = rayleigh_Q(ShellGeometry::make(plane, 1.0, 2.0, d), qcfg).Q;
    tightest = std::min(tightest, q - sigma);
    t.observe(0.0, sigma <= q + 1e-6 && sigma < at_zero, "d=" + format_number(d));
  }
  return t.outcome({}, "min_Q_minus_sigma=" + format_number(tightest));
}

Outcome mps_self_convergence(const VerifyOptions& opt) {
  const double coarse = solve_eccentric(1.0, 2.0, 0.3, mps_config(opt, 16)).sigma;
  const double fine = solve_eccentric(1.0, 2.0, 0.3, mps_config(opt, 32)).sigma;
  const double diff = std::abs(fine - coarse);
  return {diff < 1e-7, "d=0.3 N=16 vs N=32 abs_diff=" + format_number(diff)};
}

Outcome guarded(const std::function<Outcome()>& check) {
  try {
    return check();
  } catch (const std::exception& e) {
    std::string what = e.what();
    std::replace(what.begin(), what.end(), ',', ';');
    std::replace(what.begin(), what.end(), '\n', ' ');
    return {false, "error: " + what};
  }
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::string VerifyReport::render() const {
  std::ostringstream os;
  os << "check,status,detail\n";
  for (const auto& c : checks) os << c.name << ',' << (c.passed ? "pass" : "fail") << ',' << c.detail << '\n';
  return os.str();
}

std::vector<std::string> verification_check_names() {
  return {"closed_form_sigma1",   "rayleigh_at_zero",     "boundary_measure_pushforward",
          "denominator_monotone", "numerator_bound",      "rayleigh_upper_bound",
          "shell_zero_field",     "acute_angle_sampling", "chord_symmetry",
          "cap_measure",          "density_asymmetry",    "mode_ordering",
          "mps_concentric",       "mps_sandwich",         "mps_self_convergence"};
}

VerifyReport run_verification(const VerifyOptions& opt) {
  const QuadratureConfig qcfg;
  std::vector<SweepCase> sweeps;
  Outcome sweep_failure{true, ""};
  try {
    sweeps = run_sweeps(opt, qcfg);
  } catch (const std::exception& e) {
    sweep_failure = guarded([&]() -> Outcome { throw Error(e.what()); });
  }
  const auto on_sweeps = [&](const std::function<Outcome()>& f) {
    return [&, f]() { return sweep_failure.passed ? f() : sweep_failure; };
  };

  const std::vector<std::function<Outcome()>> runs = {
      [] { return closed_form_sigma1(); },
      [&] { return rayleigh_at_zero(qcfg); },
      on_sweeps([&] { return boundary_measure_pushforward(sweeps); }),
      on_sweeps([&] { return sweep_flag(sweeps, &SweepFlags::d_increasing); }),
      on_sweeps([&] { return sweep_flag(sweeps, &SweepFlags::n_bounded); }),
      on_sweeps([&] { return rayleigh_upper_bound(sweeps); }),
      [&] { return shell_zero_field(opt, qcfg); },
      [&] { return acute_angle_sampling(opt); },
      [&] { return chord_symmetry(opt); },
      [] { return cap_measure_check(); },
      [] { return density_asymmetry(); },
      [&] { return mode_ordering(opt); },
      [&] { return mps_concentric(opt); },
      [&] { return mps_sandwich(opt, qcfg); },
      [&] { return mps_self_convergence(opt); },
  };
  const auto names = verification_check_names();
  VerifyReport report;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const Outcome o = guarded(runs[i]);
    report.checks.push_back({names[i], o.passed, o.detail});
  }
  return report;
}

}  // namespace steklov
