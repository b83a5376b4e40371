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

#include "steklov/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <memory>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <string>

#include "steklov/error.hpp"

namespace steklov {

namespace {

constexpr int kMinOrder = 2;
constexpr int kMaxOrder = 64;

std::vector<GaussNode> compute_rule(int n) {
  std::vector<GaussNode> rule(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int j = 2; j <= n; ++j) {
      const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule[i] = {-x, w};
    rule[n - 1 - i] = {x, w};
  }
  if (n % 2 == 1) rule[n / 2].node = 0.0;
  return rule;
}

class RuleCache {
 public:
  std::span<const GaussNode> get(int order) {
    {
      std::shared_lock lock(mutex_);
      if (rules_[order]) return *rules_[order];
    }
    std::unique_lock lock(mutex_);
    if (!rules_[order]) rules_[order] = std::make_unique<std::vector<GaussNode>>(compute_rule(order));
    return *rules_[order];
  }

 private:
  std::shared_mutex mutex_;
  std::array<std::unique_ptr<std::vector<GaussNode>>, kMaxOrder + 1> rules_;
};

RuleCache& cache() {
  static RuleCache instance;
  return instance;
}

double apply_rule(const std::function<double(double)>& f, std::span<const GaussNode> rule,
                  double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (const auto& [x, w] : rule) sum += w * f(mid + half * x);
  return half * sum;
}

struct Panel {
  double a;
  double b;
  double coarse;
  int depth;
};

}  // namespace

void QuadratureConfig::validate() const {
  if (rule_order < kMinOrder || rule_order > kMaxOrder)
    throw DomainError("quadrature rule_order must lie in [2, 64]");
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw DomainError("quadrature tolerances must be positive");
  if (max_depth < 1) throw DomainError("quadrature max_depth must be at least 1");
}

std::span<const GaussNode> gauss_legendre_nodes(int order) {
  if (order < kMinOrder || order > kMaxOrder) {
    throw DomainError("Gauss-Legendre order " + std::to_string(order) + " outside [2, 64]");
  }
  return cache().get(order);
}

Integral integrate(const std::function<double(double)>& f, double a, double b,
                   const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(a <= b)) throw DomainError("integration bounds must satisfy a <= b");
  if (a == b) return {};

  const auto rule = gauss_legendre_nodes(cfg.rule_order);
  const double width = b - a;

  // Scale for the relative tolerance: integral of |f| from a coarse pass, so
  // sign-changing integrands with near-zero totals are still controlled.
  double scale = 0.0;
  {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * width;
    for (const auto& [x, w] : rule) scale += w * std::abs(f(mid + half * x));
    scale *= half;
  }
  const double tol = std::max(cfg.abs_tol, cfg.rel_tol * scale);

  Integral total;
  bool converged = true;
  std::vector<Panel> stack{{a, b, apply_rule(f, rule, a, b), 0}};
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (p.a + p.b);
    const double left = apply_rule(f, rule, p.a, mid);
    const double right = apply_rule(f, rule, mid, p.b);
    const double fine = left + right;
    const double err = std::abs(fine - p.coarse);
    if (!std::isfinite(fine)) throw DomainError("integrand is not finite on the interval");
    const double local_tol = tol * (p.b - p.a) / width;
    if (err <= local_tol || p.depth + 1 >= cfg.max_depth) {
      if (err > local_tol) converged = false;
      total.value += fine;
      total.error += err;
      continue;
    }
    // Right pushed first so panels are accumulated left to right.
    stack.push_back({mid, p.b, right, p.depth + 1});
    stack.push_back({p.a, mid, left, p.depth + 1});
  }
  if (!converged) {
    throw ConvergenceError("adaptive quadrature exceeded max_depth on [" + std::to_string(a) +
                               ", " + std::to_string(b) + "]",
                           total.value, total.error);
  }
  return total;
}

double integrate_composite(const std::function<double(double)>& f, double a, double b,
                           int order, int panels) {
  if (panels < 1) throw DomainError("composite rule needs at least one panel");
  const auto rule = gauss_legendre_nodes(order);
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) sum += apply_rule(f, rule, a + i * h, a + (i + 1) * h);
  return sum;
}

}  // namespace steklov
