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

#include "steklov/mps2d.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include "steklov/dense.hpp"

namespace steklov {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;
constexpr double kIllConditioned = 1e12;
// Refined minima at or below this (column-normalized) level are eigenvalue
// candidates; the lowest such sigma is reported.
constexpr double kAcceptLevel = 1e-6;

// Basis values and outer normal derivatives at the collocation points, so
// A(sigma) = [inner; normal - sigma * outer] is cheap to form per trial.
// Columns are scaled by the reciprocal norm of each basis function's full
// boundary data (values on both circles plus outer normal derivatives). The
// scale does not depend on sigma, so a null vector of A(sigma) carried by a
// single column (the log term when d = 0) is not normalized away.
struct Collocation {
  Matrix inner;
  Matrix outer;
  Matrix normal;
  std::vector<double> scale;
  double norm_ratio = 0.0;
};

std::size_t basis_size(int order) { return 2 + 2 * static_cast<std::size_t>(order); }

// Writes basis values (and derivatives dotted with `dir`, if given) at point p.
void evaluate_basis(cplx z, cplx w, int order, std::span<double> value,
                    std::span<double> deriv, const cplx* dir) {
  const cplx zinv = 1.0 / z;
  value[0] = 1.0;
  value[1] = std::log(std::abs(z));
  if (dir) {
    deriv[0] = 0.0;
    deriv[1] = std::real(zinv * *dir);
  }
  cplx zpow = 1.0;  // z^-j
  cplx wpow = 1.0;  // w^j
  for (int j = 1; j <= order; ++j) {
    const cplx wprev = wpow;
    zpow *= zinv;
    wpow *= w;
    value[1 + j] = zpow.real();
    value[1 + order + j] = wpow.real();
    if (dir) {
      // d/dz z^-j = -j z^-(j+1); d/dw w^j = j w^(j-1); grad Re f . n = Re(f' n)
      deriv[1 + j] = std::real(-static_cast<double>(j) * zpow * zinv * *dir);
      deriv[1 + order + j] = std::real(static_cast<double>(j) * wprev * *dir);
    }
  }
}

Collocation build_collocation(double r1, double r2, double d, const MpsConfig& cfg) {
  const std::size_t cols = basis_size(cfg.basis_order);
  const std::size_t pts = static_cast<std::size_t>(cfg.collocation_factor) * cols;
  Collocation c{Matrix(pts, cols), Matrix(pts, cols), Matrix(pts, cols), {}, 0.0};
  std::vector<double> value(cols);
  std::vector<double> deriv(cols);
  const cplx outer_center(d, 0.0);
  for (std::size_t i = 0; i < pts; ++i) {
    // Upper half circles suffice: the basis is even about the axis.
    const double t = kPi * (static_cast<double>(i) + 0.5) / static_cast<double>(pts);
    const cplx dir = std::polar(1.0, t);

    const cplx p_in = r1 * dir;
    evaluate_basis(p_in, p_in - outer_center, cfg.basis_order, value, deriv, nullptr);
    for (std::size_t j = 0; j < cols; ++j) c.inner(i, j) = value[j];

    const cplx p_out = outer_center + r2 * dir;
    evaluate_basis(p_out, p_out - outer_center, cfg.basis_order, value, deriv, &dir);
    for (std::size_t j = 0; j < cols; ++j) {
      c.outer(i, j) = value[j];
      c.normal(i, j) = deriv[j];
    }
  }
  c.scale.resize(cols);
  double max_norm = 0.0;
  double min_norm = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < cols; ++j) {
    double norm2 = 0.0;
    for (const Matrix* m : {&c.inner, &c.outer, &c.normal})
      for (double x : m->column(j)) norm2 += x * x;
    const double norm = std::sqrt(norm2);
    max_norm = std::max(max_norm, norm);
    min_norm = std::min(min_norm, norm);
    c.scale[j] = 1.0 / norm;
  }
  c.norm_ratio = max_norm / min_norm;
  return c;
}

struct Assembled {
  double smallest;
  double norm_ratio;
};

Assembled smallest_at(const Collocation& c, double sigma) {
  const std::size_t pts = c.inner.rows();
  const std::size_t cols = c.inner.cols();
  Matrix a(2 * pts, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    auto col = a.column(j);
    for (std::size_t i = 0; i < pts; ++i) {
      col[i] = c.inner(i, j) * c.scale[j];
      col[pts + i] = (c.normal(i, j) - sigma * c.outer(i, j)) * c.scale[j];
    }
  }
  return {smallest_singular_value(a), c.norm_ratio};
}

std::pair<double, double> bracket_for(double r1, double r2, const MpsConfig& cfg) {
  if (cfg.sigma_bracket) return *cfg.sigma_bracket;
  const double sc = concentric_planar_sigma(r1, r2);
  return {0.1 * sc, 1.5 * sc};
}

void check_geometry(double r1, double r2, double d) {
  if (!(r1 > 0.0) || !(r1 < r2)) throw DomainError("annulus radii must satisfy 0 < R1 < R2");
  if (!(d >= 0.0) || !(d < r2 - r1)) throw DomainError("displacement must satisfy 0 <= d < R2 - R1");
}

// Golden-section search for the minimum of f on [lo, hi].
template <class F>
std::pair<double, double> golden_minimize(F&& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

}  // namespace

void MpsConfig::validate() const {
  if (basis_order < 4) throw DomainError("basis_order must be at least 4");
  if (collocation_factor < 2) throw DomainError("collocation_factor must be at least 2");
  if (scan_points < 3) throw DomainError("scan_points must be at least 3");
  if (!(refine_tol > 0.0)) throw DomainError("refine_tol must be positive");
  if (sigma_bracket && !(sigma_bracket->first > 0.0 && sigma_bracket->first < sigma_bracket->second))
    throw DomainError("sigma bracket must satisfy 0 < low < high");
  if (2 * basis_size(basis_order) * collocation_factor > 2000 || basis_size(basis_order) > 500)
    throw DomainError("collocation matrix would exceed 2000 x 500");
}

double concentric_planar_sigma(double r1, double r2) {
  check_geometry(r1, r2, 0.0);
  return 1.0 / (r2 * std::log(r2 / r1));
}

double mps_singular_value(double r1, double r2, double d, double sigma, const MpsConfig& cfg) {
  cfg.validate();
  check_geometry(r1, r2, d);
  return smallest_at(build_collocation(r1, r2, d, cfg), sigma).smallest;
}

MpsResult solve_eccentric(double r1, double r2, double d, const MpsConfig& cfg) {
  cfg.validate();
  check_geometry(r1, r2, d);
  const auto [lo, hi] = bracket_for(r1, r2, cfg);
  const Collocation colloc = build_collocation(r1, r2, d, cfg);

  MpsResult out;
  out.basis_order = cfg.basis_order;
  const auto k = static_cast<std::size_t>(cfg.scan_points);
  out.scan_trace.resize(k);
  const auto scan_one = [&](std::size_t i) {
    const double sigma = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(k - 1);
    out.scan_trace[i] = {sigma, smallest_at(colloc, sigma).smallest};
  };
  const int workers = std::clamp(cfg.threads, 1, cfg.scan_points);
  if (workers == 1) {
    for (std::size_t i = 0; i < k; ++i) scan_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < k; i = next++) scan_one(i);
      });
  }

  const auto& tr = out.scan_trace;
  std::vector<std::pair<double, double>> minima;  // refined (sigma, value)
  for (std::size_t i = 1; i + 1 < k; ++i) {
    if (tr[i].second <= tr[i - 1].second && tr[i].second < tr[i + 1].second) {
      minima.push_back(golden_minimize(
          [&](double s) { return smallest_at(colloc, s).smallest; }, tr[i - 1].first,
          tr[i + 1].first, cfg.refine_tol));
    }
  }
  if (minima.empty()) {
    std::ostringstream os;
    os << "no singular-value minimum inside the bracket [" << lo << ", " << hi << "]";
    throw NoMinimumError(os.str(), out.scan_trace);
  }
  // Lowest sigma among eigenvalue-level minima; otherwise the deepest one.
  auto chosen = std::find_if(minima.begin(), minima.end(),
                             [](const auto& m) { return m.second <= kAcceptLevel; });
  if (chosen == minima.end()) {
    chosen = std::min_element(minima.begin(), minima.end(),
                              [](const auto& a, const auto& b) { return a.second < b.second; });
  }
  out.sigma = chosen->first;
  out.min_singular_value = chosen->second;
  out.column_norm_ratio = smallest_at(colloc, out.sigma).norm_ratio;
  out.ill_conditioned = out.column_norm_ratio > kIllConditioned;
  return out;
}

}  // namespace steklov
