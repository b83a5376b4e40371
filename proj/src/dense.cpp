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

#include "steklov/dense.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "steklov/error.hpp"

namespace steklov {

namespace {

constexpr std::size_t kMaxRows = 2000;
constexpr std::size_t kMaxCols = 500;
constexpr int kMaxSweeps = 80;

double dot(std::span<const double> x, std::span<const double> y) {
  return std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
}

// Returns the n x n upper-triangular R of A = QR (Q discarded).
Matrix householder_r(Matrix a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<double> v(m);
  for (std::size_t k = 0; k < n; ++k) {
    double norm2 = 0.0;
    for (std::size_t i = k; i < m; ++i) norm2 += a(i, k) * a(i, k);
    const double norm = std::sqrt(norm2);
    if (norm == 0.0) continue;
    const double alpha = a(k, k) > 0.0 ? -norm : norm;
    for (std::size_t i = k; i < m; ++i) v[i] = a(i, k);
    v[k] -= alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = k; i < m; ++i) vnorm2 += v[i] * v[i];
    if (vnorm2 == 0.0) continue;
    for (std::size_t j = k; j < n; ++j) {
      double s = 0.0;
      for (std::size_t i = k; i < m; ++i) s += v[i] * a(i, j);
      s = 2.0 * s / vnorm2;
      for (std::size_t i = k; i < m; ++i) a(i, j) -= s * v[i];
    }
  }
  Matrix r(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i <= j; ++i) r(i, j) = a(i, j);
  return r;
}

}  // namespace

std::vector<double> singular_values(const Matrix& a) {
  if (a.rows() < a.cols()) throw DomainError("singular values need rows >= columns");
  if (a.rows() > kMaxRows || a.cols() > kMaxCols) throw DomainError("matrix exceeds 2000 x 500");
  if (a.cols() == 0) return {};
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (double x : a.column(j))
      if (!std::isfinite(x)) throw DomainError("matrix entries must be finite");

  Matrix r = householder_r(a);
  const std::size_t n = r.cols();
  // Rotation threshold on the cosine between columns; a bare epsilon can
  // cycle on rounding noise once the columns are orthogonal to working precision.
  const double tol = static_cast<double>(n) * std::numeric_limits<double>::epsilon();
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        auto cp = r.column(p);
        auto cq = r.column(q);
        const double alpha = dot(cp, cp);
        const double beta = dot(cq, cq);
        const double gamma = dot(cp, cq);
        if (std::abs(gamma) <= tol * std::sqrt(alpha * beta) || gamma == 0.0) continue;
        converged = false;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = c * t;
        for (std::size_t i = 0; i < n; ++i) {
          const double xp = cp[i];
          const double xq = cq[i];
          cp[i] = c * xp - s * xq;
          cq[i] = s * xp + c * xq;
        }
      }
    }
  }
  if (!converged) throw NumericError("one-sided Jacobi SVD did not converge");

  std::vector<double> sv(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto col = r.column(j);
    sv[j] = std::sqrt(dot(col, col));
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

double smallest_singular_value(const Matrix& a) {
  const auto sv = singular_values(a);
  if (sv.empty()) throw DomainError("matrix has no columns");
  return sv.back();
}

}  // namespace steklov
