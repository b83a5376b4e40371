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

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "steklov/steklov.h"

namespace {

struct Space {
  explicit Space(const char* family, int dim) { REQUIRE(stk_space_create(family, dim, &handle) == STK_OK); }
  ~Space() { stk_space_destroy(handle); }
  Space(const Space&) = delete;
  Space& operator=(const Space&) = delete;
  stk_space* handle = nullptr;
};

std::string take(char* text) {
  std::string out(text);
  stk_string_free(text);
  return out;
}

double cube(double x, void*) { return x * x * x; }
double wiggle(double x, void*) { return std::sin(40.0 * x); }

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(stk_status_name(STK_OK)) == "ok");
  CHECK(std::string(stk_status_name(STK_ERR_DOMAIN)) == "domain");
  CHECK(std::strlen(stk_version()) > 0);
}

TEST_CASE("space creation and info") {
  stk_space* s = nullptr;
  CHECK(stk_space_create("torus", 2, &s) == STK_ERR_ARGUMENT);
  CHECK(s == nullptr);
  CHECK(std::string(stk_last_error()).find("torus") != std::string::npos);
  CHECK(stk_space_create("cp", 1, &s) == STK_ERR_DOMAIN);
  CHECK(stk_space_create(nullptr, 2, &s) == STK_ERR_ARGUMENT);
  CHECK(stk_space_create("sphere", 3, nullptr) == STK_ERR_ARGUMENT);

  Space cp("CP", 2);
  stk_space_info info{};
  REQUIRE(stk_space_get_info(cp.handle, &info) == STK_OK);
  CHECK(std::string(info.name) == "cp");
  CHECK(info.m == 4);
  CHECK(info.k == 2);
  CHECK(info.compact == 1);
  CHECK(info.constant_curvature == 0);
  CHECK(info.inj_bounded == 1);
  CHECK(info.inj == doctest::Approx(std::numbers::pi / 2));

  Space rh("rh", 3);
  REQUIRE(stk_space_get_info(rh.handle, &info) == STK_OK);
  CHECK(info.curvature == -1);
  CHECK(info.inj_bounded == 0);
  int bounded = 1;
  double value = 0.0;
  CHECK(stk_max_outer_radius(rh.handle, &bounded, &value) == STK_OK);
  CHECK(bounded == 0);
  stk_space_destroy(nullptr);
}

TEST_CASE("density and sphere area") {
  Space cp("cp", 2);
  double w = 0.0;
  REQUIRE(stk_density(cp.handle, std::numbers::pi / 6, &w) == STK_OK);
  CHECK(w == doctest::Approx(0.10825317547305482).epsilon(1e-15));
  CHECK(stk_density(cp.handle, 2.0, &w) == STK_ERR_DOMAIN);
  CHECK(std::strlen(stk_last_error()) > 0);
  double dw = 0.0;
  CHECK(stk_density_derivative(cp.handle, 0.5, &dw) == STK_OK);
  double area = 0.0;
  CHECK(stk_unit_sphere_area(3, &area) == STK_OK);
  CHECK(area == doctest::Approx(4 * std::numbers::pi));
  CHECK(stk_unit_sphere_area(0, &area) == STK_ERR_DOMAIN);
}

TEST_CASE("quadrature through a callback") {
  double value = 0.0, error = 0.0;
  REQUIRE(stk_integrate(cube, nullptr, 0.0, 2.0, nullptr, &value, &error) == STK_OK);
  CHECK(value == doctest::Approx(4.0).epsilon(1e-14));
  stk_quad_config cfg = stk_quad_config_default();
  cfg.max_depth = 2;
  cfg.rule_order = 4;
  value = std::nan("");
  CHECK(stk_integrate(wiggle, nullptr, 0.0, 3.0, &cfg, &value, &error) == STK_ERR_CONVERGENCE);
  CHECK(std::isfinite(value));
  CHECK(stk_integrate(nullptr, nullptr, 0.0, 1.0, nullptr, &value, &error) == STK_ERR_ARGUMENT);

  std::vector<double> nodes(3), weights(3);
  REQUIRE(stk_gauss_legendre(3, nodes.data(), weights.data()) == STK_OK);
  CHECK(weights[1] == doctest::Approx(8.0 / 9.0));
  CHECK(stk_gauss_legendre(1, nodes.data(), weights.data()) == STK_ERR_DOMAIN);
}

TEST_CASE("radial quantities") {
  Space e3("euclidean", 3);
  double sigma = 0.0;
  REQUIRE(stk_sigma1_concentric(e3.handle, 1.0, 2.0, nullptr, &sigma) == STK_OK);
  CHECK(sigma == doctest::Approx(0.5).epsilon(1e-13));
  REQUIRE(stk_radial_mode_sigma(e3.handle, 1.0, 2.0, 1, 0.0, &sigma) == STK_OK);
  CHECK(sigma == doctest::Approx(5.0 / 7.0).epsilon(1e-8));
  std::vector<double> sigmas(4);
  int first = 0, increasing = 0;
  REQUIRE(stk_mode_ordering(e3.handle, 1.0, 2.0, 3, 0.0, sigmas.data(), &first, &increasing) == STK_OK);
  CHECK(first == 1);
  CHECK(increasing == 1);
  CHECK(sigmas[2] == doctest::Approx(67.0 / 62.0).epsilon(1e-8));

  Space cp("cp", 2);
  CHECK(stk_radial_mode_sigma(cp.handle, 0.2, 0.7, 1, 0.0, &sigma) == STK_ERR_UNSUPPORTED);
}

TEST_CASE("triangle kernel") {
  double side = 0.0, angle = 0.0, rho = 0.0;
  int collinear = -1, ok = 0;
  REQUIRE(stk_side_from_sas(0, 3.0, 4.0, std::numbers::pi / 2, &side, &collinear) == STK_OK);
  CHECK(side == doctest::Approx(5.0));
  CHECK(collinear == 0);
  CHECK(stk_side_from_sas(2, 3.0, 4.0, 1.0, &side, &collinear) == STK_ERR_ARGUMENT);
  REQUIRE(stk_angle_from_sss(0, 1.0, 1.0, 1.0, &angle) == STK_OK);
  CHECK(angle == doctest::Approx(std::numbers::pi / 3));
  CHECK(stk_angle_from_sss(0, 5.0, 1.0, 1.0, &angle) == STK_ERR_DOMAIN);
  REQUIRE(stk_boundary_distance(0, 0.5, 2.0, std::numbers::pi / 2, &rho) == STK_OK);
  CHECK(rho == doctest::Approx(std::sqrt(3.75)));
  REQUIRE(stk_acute_angle_check(1, 1000, 7, &ok) == STK_OK);
  CHECK(ok == 1);
  REQUIRE(stk_chord_symmetry_check(-1, 0.5, 1.0, 500, 7, &ok) == STK_OK);
  CHECK(ok == 1);
}

TEST_CASE("shell functionals") {
  Space e3("euclidean", 3);
  stk_record rec{};
  REQUIRE(stk_rayleigh(e3.handle, 1.0, 2.0, 0.0, nullptr, &rec) == STK_OK);
  CHECK(rec.Q == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rec.D == doctest::Approx(4 * std::numbers::pi).epsilon(1e-12));
  CHECK(stk_rayleigh(e3.handle, 1.0, 2.0, 1.0, nullptr, &rec) == STK_ERR_DOMAIN);
  double residual = 1.0;
  REQUIRE(stk_newton_residual(e3.handle, 2.0, 0.5, nullptr, &residual) == STK_OK);
  CHECK(std::abs(residual) < 1e-12);

  Space s3("sphere", 3);
  double left = 0.0, right = 0.0;
  int ok = 0;
  REQUIRE(stk_cap_measure_compare(s3.handle, 1.2, 0.5, 0.3, &left, &right, &ok) == STK_OK);
  CHECK(ok == 1);
  CHECK(left <= right);
  CHECK(stk_cap_measure_compare(e3.handle, 1.2, 0.5, 0.3, &left, &right, &ok) == STK_ERR_UNSUPPORTED);
  const double grid[] = {0.1, 0.5};
  REQUIRE(stk_omega_asymmetry(s3.handle, 1.2, grid, 2, &ok) == STK_OK);
  CHECK(ok == 1);
}

TEST_CASE("sweeps") {
  Space s2("sphere", 2);
  std::vector<double> d(5);
  REQUIRE(stk_default_d_grid(0.3, 1.2, 5, d.data()) == STK_OK);
  d.push_back(0.95);  // outside the admissible range
  stk_sweep* one = nullptr;
  stk_sweep* four = nullptr;
  REQUIRE(stk_sweep_run(s2.handle, 0.3, 1.2, d.data(), d.size(), nullptr, 1, &one) == STK_OK);
  REQUIRE(stk_sweep_run(s2.handle, 0.3, 1.2, d.data(), d.size(), nullptr, 4, &four) == STK_OK);
  CHECK(stk_sweep_size(one) == 6);

  stk_record rec{};
  const char* error = nullptr;
  CHECK(stk_sweep_record(one, 2, &rec, &error) == STK_OK);
  CHECK(rec.d == d[2]);
  CHECK(stk_sweep_record(one, 5, &rec, &error) == STK_ERR_NUMERIC);
  REQUIRE(error != nullptr);
  CHECK(std::strlen(error) > 0);
  CHECK(stk_sweep_record(one, 6, &rec, &error) == STK_ERR_ARGUMENT);

  stk_sweep_flags flags{};
  REQUIRE(stk_sweep_get_flags(one, &flags) == STK_OK);
  CHECK(flags.complete == 0);
  CHECK(flags.q_bounded == 1);

  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(stk_sweep_render(one, STK_FORMAT_CSV, 1, &a) == STK_OK);
  REQUIRE(stk_sweep_render(four, STK_FORMAT_CSV, 1, &b) == STK_OK);
  const std::string csv = take(a);
  CHECK(csv == take(b));
  CHECK(csv.find("Q_lt_Q0") != std::string::npos);
  REQUIRE(stk_sweep_render(one, STK_FORMAT_JSON, 0, &a) == STK_OK);
  CHECK(take(a).front() == '[');
  CHECK(stk_sweep_render(one, static_cast<stk_format>(7), 0, &a) == STK_ERR_ARGUMENT);
  CHECK(stk_sweep_write(one, "/nonexistent-dir/x.csv", STK_FORMAT_CSV, 0) == STK_ERR_IO);
  CHECK(std::string(stk_last_error()).find("/nonexistent-dir/x.csv") != std::string::npos);

  stk_sweep_destroy(one);
  stk_sweep_destroy(four);
  stk_sweep_destroy(nullptr);
}

TEST_CASE("planar eccentric annulus") {
  double concentric = 0.0;
  REQUIRE(stk_concentric_planar_sigma(1.0, 2.0, &concentric) == STK_OK);
  stk_mps_config cfg = stk_mps_config_default();
  stk_mps_result* res = nullptr;
  REQUIRE(stk_mps_solve(1.0, 2.0, 0.0, &cfg, &res) == STK_OK);
  stk_mps_summary summary{};
  REQUIRE(stk_mps_get_summary(res, &summary) == STK_OK);
  CHECK(std::abs(summary.sigma - concentric) < 1e-6);
  CHECK(summary.trace_size == 200);
  double sigma = 0.0, sv = 0.0;
  CHECK(stk_mps_trace_point(res, 0, &sigma, &sv) == STK_OK);
  CHECK(stk_mps_trace_point(res, 200, &sigma, &sv) == STK_ERR_ARGUMENT);
  char* trace = nullptr;
  REQUIRE(stk_mps_render_trace(res, &trace) == STK_OK);
  CHECK(take(trace).rfind("sigma,singular_value\n", 0) == 0);
  stk_mps_result_destroy(res);

  cfg.sigma_low = 0.05;
  cfg.sigma_high = 0.06;
  res = nullptr;
  CHECK(stk_mps_solve(1.0, 2.0, 0.0, &cfg, &res) == STK_ERR_NUMERIC);
  REQUIRE(res != nullptr);
  REQUIRE(stk_mps_get_summary(res, &summary) == STK_OK);
  CHECK(std::isnan(summary.sigma));
  CHECK(summary.trace_size == 200);
  stk_mps_result_destroy(res);

  cfg = stk_mps_config_default();
  cfg.basis_order = 2;
  res = nullptr;
  CHECK(stk_mps_solve(1.0, 2.0, 0.0, &cfg, &res) == STK_ERR_DOMAIN);
  CHECK(res == nullptr);
}

TEST_CASE("smallest singular value of a caller matrix") {
  const double m[] = {3.0, 0.0, 0.0, 0.0, 2.0, 0.0};  // 3 x 2, column-major
  double out = 0.0;
  REQUIRE(stk_smallest_singular_value(m, 3, 2, &out) == STK_OK);
  CHECK(out == doctest::Approx(2.0));
  CHECK(stk_smallest_singular_value(m, 2, 3, &out) == STK_ERR_DOMAIN);
}

TEST_CASE("fast verification through the C interface") {
  stk_verify_options opts = stk_verify_options_default();
  CHECK(opts.seed == 42);
  opts.fast = 1;
  char* report = nullptr;
  int all = 0;
  REQUIRE(stk_verify(&opts, &report, &all) == STK_OK);
  CHECK(all == 1);
  CHECK(take(report).rfind("check,status,detail\n", 0) == 0);
}

TEST_CASE("number formatting into a caller buffer") {
  char buf[32];
  REQUIRE(stk_format_number(0.5, buf, sizeof buf) == STK_OK);
  CHECK(std::string(buf) == "0.5");
  CHECK(stk_format_number(0.1, buf, 4) == STK_ERR_ARGUMENT);
}

TEST_CASE("error messages are per thread") {
  double w = 0.0;
  Space s2("sphere", 2);
  CHECK(stk_density(s2.handle, -1.0, &w) == STK_ERR_DOMAIN);
  const std::string mine = stk_last_error();
  std::string theirs;
  std::thread([&] {
    stk_space* s = nullptr;
    CHECK(stk_space_create("nowhere", 2, &s) == STK_ERR_ARGUMENT);
    theirs = stk_last_error();
  }).join();
  CHECK(std::string(stk_last_error()) == mine);
  CHECK(theirs != mine);
}

TEST_CASE("null outputs are argument errors") {
  Space e3("euclidean", 3);
  CHECK(stk_density(e3.handle, 1.0, nullptr) == STK_ERR_ARGUMENT);
  CHECK(stk_density(nullptr, 1.0, nullptr) == STK_ERR_ARGUMENT);
  CHECK(stk_space_get_info(e3.handle, nullptr) == STK_ERR_ARGUMENT);
  CHECK(stk_sweep_run(e3.handle, 1.0, 2.0, nullptr, 3, nullptr, 1, nullptr) == STK_ERR_ARGUMENT);
  CHECK(stk_mps_get_summary(nullptr, nullptr) == STK_ERR_ARGUMENT);
  CHECK(stk_verify(nullptr, nullptr, nullptr) == STK_ERR_ARGUMENT);
}
