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

#include "steklov/radial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "steklov/error.hpp"

namespace steklov {

namespace {

void check_shell_radii(const ModelSpace& space, double r1, double r2) {
  if (!(r1 > 0.0) || !(r1 < r2)) throw DomainError("radii must satisfy 0 < R1 < R2");
  if (!max_outer_radius(space).admits(r2)) {
    throw DomainError("outer radius " + std::to_string(r2) +
                      " must stay below half the injectivity radius");
  }
}

}  // namespace

RadialProfile::RadialProfile(ModelSpace space, double r1, int mode, std::vector<double> grid,
                             std::vector<double> a, std::vector<double> a_prime,
                             QuadratureConfig cfg)
    : space_(space),
      r1_(r1),
      mode_(mode),
      grid_(std::move(grid)),
      a_(std::move(a)),
      a_prime_(std::move(a_prime)),
      cfg_(cfg) {
  if (grid_.size() < 2 || grid_.size() != a_.size() || grid_.size() != a_prime_.size())
    throw DomainError("radial profile arrays must have equal length >= 2");
}

double RadialProfile::at(double r) const {
  if (mode_ != 0) throw DomainError("pointwise evaluation is only available for mode 0");
  const double span = grid_.back() - grid_.front();
  if (r < r1_ || r > grid_.back() + 1e-14 * span) {
    throw DomainError("radius " + std::to_string(r) + " outside the profile range");
  }
  auto it = std::upper_bound(grid_.begin(), grid_.end(), r);
  const auto idx = static_cast<std::size_t>(std::distance(grid_.begin(), it)) - 1;
  const double base = grid_[idx];
  if (r == base) return a_[idx];
  const auto inv = [this](double t) { return 1.0 / density(space_, t); };
  return a_[idx] + integrate(inv, base, r, cfg_).value;
}

RadialProfile first_radial(const ModelSpace& space, double r1, double r_max,
                           const QuadratureConfig& cfg, int grid_cells) {
  if (!(r1 > 0.0) || !(r1 < r_max)) throw DomainError("first_radial needs 0 < R1 < r_max");
  if (!space.injectivity_radius().admits(r_max))
    throw DomainError("r_max must stay below the injectivity radius");
  if (grid_cells < 1) throw DomainError("grid_cells must be positive");

  const auto inv = [&space](double t) { return 1.0 / density(space, t); };
  std::vector<double> grid(grid_cells + 1);
  std::vector<double> a(grid_cells + 1);
  std::vector<double> ap(grid_cells + 1);
  const double h = (r_max - r1) / grid_cells;
  for (int i = 0; i <= grid_cells; ++i) grid[i] = i == grid_cells ? r_max : r1 + i * h;
  a[0] = 0.0;
  for (int i = 1; i <= grid_cells; ++i) a[i] = a[i - 1] + integrate(inv, grid[i - 1], grid[i], cfg).value;
  for (int i = 0; i <= grid_cells; ++i) ap[i] = inv(grid[i]);
  return RadialProfile(space, r1, 0, std::move(grid), std::move(a), std::move(ap), cfg);
}

double sigma1_concentric(const ModelSpace& space, double r1, double r2,
                         const QuadratureConfig& cfg) {
  check_shell_radii(space, r1, r2);
  const auto profile = first_radial(space, r1, r2, cfg);
  return 1.0 / (density(space, r2) * profile.values().back());
}

RadialProfile radial_mode(const ModelSpace& space, double r1, double r2, int l,
                          double ode_step) {
  check_shell_radii(space, r1, r2);
  if (l < 0) throw DomainError("mode index must be non-negative");
  if (l > 0 && !space.constant_curvature()) {
    throw UnsupportedFamilyError(
        "geodesic spheres are not round in '" + std::string(space.name()) +
        "'; only the l = 0 mode is available");
  }
  const double width = r2 - r1;
  if (ode_step == 0.0) ode_step = width / 4096.0;
  if (!(ode_step > 0.0) || ode_step > width) throw DomainError("ODE step must lie in (0, R2 - R1]");
  const int steps = std::max(1, static_cast<int>(std::lround(width / ode_step)));
  const double h = width / steps;

  const double eig_numer = static_cast<double>(l) * (l + space.m() - 2);
  // y = (a, a')
  const auto rhs = [&](double r, double a, double ap, double& da, double& dap) {
    const double s = space.s(r);
    da = ap;
    dap = -density_derivative(space, r) / density(space, r) * ap + eig_numer / (s * s) * a;
  };

  std::vector<double> grid(steps + 1);
  std::vector<double> a(steps + 1);
  std::vector<double> ap(steps + 1);
  grid[0] = r1;
  a[0] = 0.0;
  ap[0] = 1.0;
  for (int i = 0; i < steps; ++i) {
    const double r = r1 + i * h;
    const double y0 = a[i];
    const double y1 = ap[i];
    double k1a, k1b, k2a, k2b, k3a, k3b, k4a, k4b;
    rhs(r, y0, y1, k1a, k1b);
    rhs(r + 0.5 * h, y0 + 0.5 * h * k1a, y1 + 0.5 * h * k1b, k2a, k2b);
    rhs(r + 0.5 * h, y0 + 0.5 * h * k2a, y1 + 0.5 * h * k2b, k3a, k3b);
    rhs(r + h, y0 + h * k3a, y1 + h * k3b, k4a, k4b);
    a[i + 1] = y0 + h / 6.0 * (k1a + 2.0 * k2a + 2.0 * k3a + k4a);
    ap[i + 1] = y1 + h / 6.0 * (k1b + 2.0 * k2b + 2.0 * k3b + k4b);
    grid[i + 1] = i + 1 == steps ? r2 : r1 + (i + 1) * h;
  }
  return RadialProfile(space, r1, l, std::move(grid), std::move(a), std::move(ap));
}

ModeOrdering mode_ordering_check(const ModelSpace& space, double r1, double r2, int l_max,
                                 double ode_step) {
  if (l_max < 0) throw DomainError("l_max must be non-negative");
  ModeOrdering out;
  for (int l = 0; l <= l_max; ++l) {
    out.sigmas.emplace_back(l, radial_mode(space, r1, r2, l, ode_step).steklov_ratio());
  }
  for (std::size_t i = 1; i < out.sigmas.size(); ++i) {
    if (!(out.sigmas[0].second < out.sigmas[i].second)) out.first_is_smallest = false;
    if (!(out.sigmas[i - 1].second < out.sigmas[i].second)) out.strictly_increasing = false;
  }
  return out;
}

}  // namespace steklov
