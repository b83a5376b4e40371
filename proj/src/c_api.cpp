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

#include "steklov/steklov.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <limits>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "steklov/dense.hpp"
#include "steklov/error.hpp"
#include "steklov/geodesic_trig.hpp"
#include "steklov/model_space.hpp"
#include "steklov/mps2d.hpp"
#include "steklov/quadrature.hpp"
#include "steklov/radial.hpp"
#include "steklov/records.hpp"
#include "steklov/shell_functionals.hpp"
#include "steklov/verify.hpp"

struct stk_space {
  steklov::ModelSpace space;
};

struct stk_sweep {
  steklov::SweepResult result;
};

struct stk_mps_result {
  std::optional<steklov::MpsResult> result;
  steklov::ScanTrace trace;
};

namespace {

thread_local std::string last_error;

stk_status fail(stk_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Maps the library's exceptions onto status codes.
template <class F>
stk_status guarded(F&& body) {
  try {
    body();
    return STK_OK;
  } catch (const steklov::DomainError& e) {
    return fail(STK_ERR_DOMAIN, e.what());
  } catch (const steklov::UnsupportedFamilyError& e) {
    return fail(STK_ERR_UNSUPPORTED, e.what());
  } catch (const steklov::ConvergenceError& e) {
    return fail(STK_ERR_CONVERGENCE, e.what());
  } catch (const steklov::NumericError& e) {
    return fail(STK_ERR_NUMERIC, e.what());
  } catch (const steklov::InvariantViolation& e) {
    return fail(STK_ERR_INVARIANT, e.what());
  } catch (const steklov::IoError& e) {
    return fail(STK_ERR_IO, e.what());
  } catch (const steklov::Error& e) {
    return fail(STK_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(STK_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(STK_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(STK_ERR_INTERNAL, "unknown failure");
  }
}

#define STK_REQUIRE(ptr)                                                   \
  do {                                                                     \
    if ((ptr) == nullptr) return fail(STK_ERR_ARGUMENT, #ptr " is null"); \
  } while (0)

steklov::QuadratureConfig to_cfg(const stk_quad_config* cfg) {
  steklov::QuadratureConfig out;
  if (cfg) {
    out.rule_order = cfg->rule_order;
    out.abs_tol = cfg->abs_tol;
    out.rel_tol = cfg->rel_tol;
    out.max_depth = cfg->max_depth;
  }
  out.validate();
  return out;
}

std::optional<steklov::Curvature> to_curvature(int kappa) {
  switch (kappa) {
    case -1:
      return steklov::Curvature::Hyperbolic;
    case 0:
      return steklov::Curvature::Flat;
    case 1:
      return steklov::Curvature::Spherical;
    default:
      return std::nullopt;
  }
}

#define STK_CURVATURE(var, kappa)                                                 \
  const auto var##_opt = to_curvature(kappa);                                     \
  if (!var##_opt) return fail(STK_ERR_ARGUMENT, "curvature must be -1, 0 or 1"); \
  const steklov::Curvature var = *var##_opt

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

stk_record to_record(const steklov::SweepRecord& r) {
  return {r.d, r.N, r.D, r.D_alt, r.Q, r.sigma1_concentric, r.newton_residual, r.quad_err};
}

std::optional<steklov::RecordFormat> to_format(stk_format f) {
  if (f == STK_FORMAT_CSV) return steklov::RecordFormat::Csv;
  if (f == STK_FORMAT_JSON) return steklov::RecordFormat::Json;
  return std::nullopt;
}

#define STK_FORMAT(var, format)                                          \
  const auto var##_opt = to_format(format);                              \
  if (!var##_opt) return fail(STK_ERR_ARGUMENT, "unknown output format"); \
  const steklov::RecordFormat var = *var##_opt

}  // namespace

extern "C" {

const char* stk_last_error(void) { return last_error.c_str(); }

const char* stk_status_name(stk_status status) {
  switch (status) {
    case STK_OK:
      return "ok";
    case STK_ERR_ARGUMENT:
      return "argument";
    case STK_ERR_DOMAIN:
      return "domain";
    case STK_ERR_UNSUPPORTED:
      return "unsupported";
    case STK_ERR_CONVERGENCE:
      return "convergence";
    case STK_ERR_NUMERIC:
      return "numeric";
    case STK_ERR_INVARIANT:
      return "invariant";
    case STK_ERR_IO:
      return "io";
    case STK_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char* stk_version(void) { return "0.1.0"; }

void stk_string_free(char* text) { delete[] text; }

stk_status stk_space_create(const char* family, int dim, stk_space** out) {
  STK_REQUIRE(family);
  STK_REQUIRE(out);
  stk_status st = STK_OK;
  try {
    steklov::parse_family(family);
  } catch (const steklov::Error& e) {
    st = fail(STK_ERR_ARGUMENT, e.what());
  }
  if (st != STK_OK) return st;
  return guarded([&] {
    *out = new stk_space{steklov::ModelSpace::make(steklov::parse_family(family), dim)};
  });
}

void stk_space_destroy(stk_space* space) { delete space; }

stk_status stk_space_get_info(const stk_space* space, stk_space_info* out) {
  STK_REQUIRE(space);
  STK_REQUIRE(out);
  return guarded([&] {
    const auto& s = space->space;
    const auto inj = s.injectivity_radius();
    stk_space_info info{};
    info.name = s.name().data();
    info.n = s.n();
    info.m = s.m();
    info.k = s.k();
    info.compact = s.compact();
    info.constant_curvature = s.constant_curvature();
    info.curvature = s.constant_curvature() ? static_cast<int>(s.curvature()) : 0;
    info.inj_bounded = inj.bounded();
    info.inj = inj.bounded() ? inj.value() : std::numeric_limits<double>::infinity();
    *out = info;
  });
}

stk_status stk_density(const stk_space* space, double r, double* out) {
  STK_REQUIRE(space);
  STK_REQUIRE(out);
  return guarded([&] { *out = steklov::density(space->space, r); });
}

stk_status stk_density_derivative(const stk_space* space, double r, double* out) {
  STK_REQUIRE(space);
  STK_REQUIRE(out);
  return guarded([&] { *out = steklov::density_derivative(space->space, r); });
}

stk_status stk_max_outer_radius(const stk_space* space, int* bounded, double* value) {
  STK_REQUIRE(space);
  STK_REQUIRE(bounded);
  STK_REQUIRE(value);
  return guarded([&] {
    const auto b = steklov::max_outer_radius(space->space);
    *bounded = b.bounded();
    *value = b.bounded() ? b.value() : std::numeric_limits<double>::infinity();
  });
}

stk_status stk_unit_sphere_area(int m, double* out) {
  STK_REQUIRE(out);
  return guarded([&] { *out = steklov::unit_sphere_area(m); });
}

stk_quad_config stk_quad_config_default(void) {
  const steklov::QuadratureConfig c;
  return {c.rule_order, c.abs_tol, c.rel_tol, c.max_depth};
}

stk_status stk_integrate(stk_integrand f, void* user, double a, double b,
                         const stk_quad_config* cfg, double* value, double* error) {
  STK_REQUIRE(f);
  STK_REQUIRE(value);
  STK_REQUIRE(error);
  try {
    const auto res = steklov::integrate([&](double x) { return f(x, user); }, a, b, to_cfg(cfg));
    *value = res.value;
    *error = res.error;
    return STK_OK;
  } catch (const steklov::ConvergenceError& e) {
    *value = e.best_value();
    *error = e.best_error();
    return fail(STK_ERR_CONVERGENCE, e.what());
  } catch (...) {
    return guarded([] { throw; });
  }
}

stk_status stk_gauss_legendre(int order, double* nodes, double* weights) {
  STK_REQUIRE(nodes);
  STK_REQUIRE(weights);
  return guarded([&] {
    const auto rule = steklov::gauss_legendre_nodes(order);
    for (std::size_t i = 0; i < rule.size(); ++i) {
      nodes[i] = rule[i].node;
      weights[i] = rule[i].weight;
    }
  });
}

stk_status stk_sigma1_concentric(const stk_space* space, double r1, double r2,
                                 const stk_quad_config* cfg, double* out) {
  STK_REQUIRE(space);
  STK_REQUIRE(out);
  return guarded([&] { *out = steklov::sigma1_concentric(space->space, r1, r2, to_cfg(cfg)); });
}

stk_status stk_radial_mode_sigma(const stk_space* space, double r1, double r2, int l,
                                 double ode_step, double* out) {
  STK_REQUIRE(space);
  STK_REQUIRE(out);
  return guarded(
      [&] { *out = steklov::radial_mode(space->space, r1, r2, l, ode_step).steklov_ratio(); });
}

stk_status stk_mode_ordering(const stk_space* space, double r1, double r2, int l_max,
                             double ode_step, double* sigmas, int* first_is_smallest,
                             int* strictly_increasing) {
  STK_REQUIRE(space);
  STK_REQUIRE(sigmas);
  STK_REQUIRE(first_is_smallest);
  STK_REQUIRE(strictly_increasing);
  return guarded([&] {
    const auto ord = steklov::mode_ordering_check(space->space, r1, r2, l_max, ode_step);
    for (std::size_t i = 0; i < ord.sigmas.size(); ++i) sigmas[i] = ord.sigmas[i].second;
    *first_is_smallest = ord.first_is_smallest;
    *strictly_increasing = ord.strictly_increasing;
  });
}

stk_status stk_side_from_sas(int curvature, double q, double r, double angle, double* side,
                             int* collinear) {
  STK_REQUIRE(side);
  STK_CURVATURE(kappa, curvature);
  return guarded([&] {
    const auto sol = steklov::solve_sas(kappa, q, r, angle);
    *side = sol.side;
    if (collinear) *collinear = sol.collinear;
  });
}

stk_status stk_angle_from_sss(int curvature, double p, double q, double r, double* angle) {
  STK_REQUIRE(angle);
  STK_CURVATURE(kappa, curvature);
  return guarded([&] { *angle = steklov::angle_from_sss(kappa, p, q, r); });
}

stk_status stk_boundary_distance(int curvature, double d, double r2, double theta, double* rho) {
  STK_REQUIRE(rho);
  STK_CURVATURE(kappa, curvature);
  return guarded([&] { *rho = steklov::boundary_distance(kappa, d, r2, theta); });
}

stk_status stk_acute_angle_check(int curvature, int samples, uint64_t seed, int* ok) {
  STK_REQUIRE(ok);
  STK_CURVATURE(kappa, curvature);
  return guarded([&] { *ok = steklov::acute_angle_check(kappa, samples, seed); });
}

stk_status stk_chord_symmetry_check(int curvature, double d, double r2, int samples,
                                    uint64_t seed, int* ok) {
  STK_REQUIRE(ok);
  STK_CURVATURE(kappa, curvature);
  return guarded([&] { *ok = steklov::chord_symmetry_check(kappa, d, r2, samples, seed); });
}

stk_status stk_rayleigh(const stk_space* space, double r1, double r2, double d,
                        const stk_quad_config* cfg, stk_record* out) {
  STK_REQUIRE(space);
  STK_REQUIRE(out);
  return guarded([&] {
    *out = to_record(
        steklov::rayleigh_Q(steklov::ShellGeometry::make(space->space, r1, r2, d), to_cfg(cfg)));
  });
}

stk_status stk_newton_residual(const stk_space* space, double r2, double x,
                               const stk_quad_config* cfg, double* out) {
  STK_REQUIRE(space);
  STK_REQUIRE(out);
  return guarded([&] { *out = steklov::newton_shell_residual(space->space, r2, x, to_cfg(cfg)); });
}

stk_status stk_cap_measure_compare(const stk_space* space, double r2, double d, double s,
                                   double* left, double* right, int* ok) {
  STK_REQUIRE(space);
  STK_REQUIRE(left);
  STK_REQUIRE(right);
  STK_REQUIRE(ok);
  return guarded([&] {
    const auto cmp = steklov::cap_measure_compare(space->space, r2, d, s);
    *left = cmp.left;
    *right = cmp.right;
    *ok = cmp.ok;
  });
}

stk_status stk_omega_asymmetry(const stk_space* space, double r2, const double* s, size_t count,
                               int* ok) {
  STK_REQUIRE(space);
  STK_REQUIRE(s);
  STK_REQUIRE(ok);
  return guarded([&] { *ok = steklov::omega_asymmetry(space->space, r2, {s, count}); });
}

stk_status stk_default_d_grid(double r1, double r2, int steps, double* out) {
  STK_REQUIRE(out);
  return guarded([&] {
    const auto grid = steklov::default_d_grid(r1, r2, steps);
    std::copy(grid.begin(), grid.end(), out);
  });
}

stk_status stk_sweep_run(const stk_space* space, double r1, double r2, const double* d,
                         size_t count, const stk_quad_config* cfg, int threads, stk_sweep** out) {
  STK_REQUIRE(space);
  STK_REQUIRE(d);
  STK_REQUIRE(out);
  return guarded([&] {
    const auto base = steklov::ShellGeometry::make(space->space, r1, r2, 0.0);
    *out = new stk_sweep{steklov::sweep(base, {d, count}, to_cfg(cfg), threads)};
  });
}

size_t stk_sweep_size(const stk_sweep* sweep) { return sweep ? sweep->result.entries.size() : 0; }

stk_status stk_sweep_record(const stk_sweep* sweep, size_t index, stk_record* out,
                            const char** error) {
  STK_REQUIRE(sweep);
  STK_REQUIRE(out);
  if (index >= sweep->result.entries.size()) return fail(STK_ERR_ARGUMENT, "record index out of range");
  const auto& e = sweep->result.entries[index];
  if (!e.record) {
    if (error) *error = e.error.c_str();
    return fail(STK_ERR_NUMERIC, e.error);
  }
  if (error) *error = nullptr;
  *out = to_record(*e.record);
  return STK_OK;
}

stk_status stk_sweep_get_flags(const stk_sweep* sweep, stk_sweep_flags* out) {
  STK_REQUIRE(sweep);
  STK_REQUIRE(out);
  const auto& f = sweep->result.flags;
  *out = {f.complete, f.d_increasing, f.n_bounded, f.q_bounded, f.q_monotone};
  return STK_OK;
}

stk_status stk_sweep_render(const stk_sweep* sweep, stk_format format, int with_flags,
                            char** text) {
  STK_REQUIRE(sweep);
  STK_REQUIRE(text);
  STK_FORMAT(fmt, format);
  return guarded([&] {
    *text = copy_string(steklov::render_records(sweep->result, fmt, with_flags != 0));
  });
}

stk_status stk_sweep_write(const stk_sweep* sweep, const char* path, stk_format format,
                           int with_flags) {
  STK_REQUIRE(sweep);
  STK_REQUIRE(path);
  STK_FORMAT(fmt, format);
  return guarded([&] { steklov::write_records(path, sweep->result, fmt, with_flags != 0); });
}

void stk_sweep_destroy(stk_sweep* sweep) { delete sweep; }

stk_mps_config stk_mps_config_default(void) {
  const steklov::MpsConfig c;
  return {c.basis_order, c.collocation_factor, 0.0, 0.0, c.scan_points, c.refine_tol, c.threads};
}

stk_status stk_mps_solve(double r1, double r2, double d, const stk_mps_config* cfg,
                         stk_mps_result** out) {
  STK_REQUIRE(out);
  steklov::MpsConfig c;
  if (cfg) {
    c.basis_order = cfg->basis_order;
    c.collocation_factor = cfg->collocation_factor;
    if (cfg->sigma_low > 0.0 || cfg->sigma_high > 0.0)
      c.sigma_bracket = std::pair{cfg->sigma_low, cfg->sigma_high};
    c.scan_points = cfg->scan_points;
    c.refine_tol = cfg->refine_tol;
    c.threads = cfg->threads;
  }
  try {
    auto res = steklov::solve_eccentric(r1, r2, d, c);
    auto trace = res.scan_trace;
    *out = new stk_mps_result{std::move(res), std::move(trace)};
    return STK_OK;
  } catch (const steklov::NoMinimumError& e) {
    *out = new stk_mps_result{std::nullopt, e.trace()};
    return fail(STK_ERR_NUMERIC, e.what());
  } catch (...) {
    return guarded([] { throw; });
  }
}

stk_status stk_mps_get_summary(const stk_mps_result* result, stk_mps_summary* out) {
  STK_REQUIRE(result);
  STK_REQUIRE(out);
  stk_mps_summary s{};
  s.sigma = std::numeric_limits<double>::quiet_NaN();
  s.min_singular_value = std::numeric_limits<double>::quiet_NaN();
  s.column_norm_ratio = std::numeric_limits<double>::quiet_NaN();
  if (result->result) {
    s.sigma = result->result->sigma;
    s.min_singular_value = result->result->min_singular_value;
    s.column_norm_ratio = result->result->column_norm_ratio;
    s.basis_order = result->result->basis_order;
    s.ill_conditioned = result->result->ill_conditioned;
  }
  s.trace_size = result->trace.size();
  *out = s;
  return STK_OK;
}

stk_status stk_mps_trace_point(const stk_mps_result* result, size_t index, double* sigma,
                               double* singular_value) {
  STK_REQUIRE(result);
  STK_REQUIRE(sigma);
  STK_REQUIRE(singular_value);
  if (index >= result->trace.size()) return fail(STK_ERR_ARGUMENT, "trace index out of range");
  *sigma = result->trace[index].first;
  *singular_value = result->trace[index].second;
  return STK_OK;
}

stk_status stk_mps_render_trace(const stk_mps_result* result, char** text) {
  STK_REQUIRE(result);
  STK_REQUIRE(text);
  return guarded([&] {
    std::string csv = "sigma,singular_value\n";
    for (const auto& [sigma, sv] : result->trace)
      csv += steklov::format_number(sigma) + "," + steklov::format_number(sv) + "\n";
    *text = copy_string(csv);
  });
}

void stk_mps_result_destroy(stk_mps_result* result) { delete result; }

stk_status stk_concentric_planar_sigma(double r1, double r2, double* out) {
  STK_REQUIRE(out);
  return guarded([&] { *out = steklov::concentric_planar_sigma(r1, r2); });
}

stk_status stk_smallest_singular_value(const double* matrix, size_t rows, size_t cols,
                                       double* out) {
  STK_REQUIRE(matrix);
  STK_REQUIRE(out);
  return guarded([&] {
    steklov::Matrix a(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t i = 0; i < rows; ++i) a(i, j) = matrix[j * rows + i];
    *out = steklov::smallest_singular_value(a);
  });
}

stk_verify_options stk_verify_options_default(void) {
  const steklov::VerifyOptions o;
  return {o.seed, o.fast, o.threads};
}

stk_status stk_verify(const stk_verify_options* options, char** report, int* all_passed) {
  STK_REQUIRE(report);
  STK_REQUIRE(all_passed);
  return guarded([&] {
    steklov::VerifyOptions o;
    if (options) {
      o.seed = options->seed;
      o.fast = options->fast != 0;
      o.threads = options->threads;
    }
    const auto r = steklov::run_verification(o);
    *report = copy_string(r.render());
    *all_passed = r.all_passed();
  });
}

stk_status stk_format_number(double x, char* buf, size_t size) {
  STK_REQUIRE(buf);
  const std::string s = steklov::format_number(x);
  if (s.size() + 1 > size) return fail(STK_ERR_ARGUMENT, "buffer too small");
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return STK_OK;
}

}  // extern "C"
