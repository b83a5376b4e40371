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

#pragma once

#include <functional>
#include <span>
#include <vector>

namespace steklov {

struct QuadratureConfig {
  int rule_order = 16;  ///< Gauss-Legendre nodes per panel
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_depth = 40;

  /// Throws DomainError when a field is out of range.
  void validate() const;
};

struct GaussNode {
  double node;
  double weight;
};

/// Gauss-Legendre rule on [-1, 1] for 2 <= order <= 64. Nodes are computed
/// once per order by Newton iteration on P_order and cached.
std::span<const GaussNode> gauss_legendre_nodes(int order);

struct Integral {
  double value = 0.0;
  /// Sum over accepted panels of |I_order - I_(2 x order composite)|.
  double error = 0.0;
};

/// Adaptive panel-bisection Gauss-Legendre quadrature of f over [a, b].
/// Throws ConvergenceError (carrying the best estimate) when max_depth is
/// exhausted before the tolerance is met.
Integral integrate(const std::function<double(double)>& f, double a, double b,
                   const QuadratureConfig& cfg = {});

/// Fixed composite rule with `panels` equal panels; no error control.
double integrate_composite(const std::function<double(double)>& f, double a, double b,
                           int order, int panels);

}  // namespace steklov
