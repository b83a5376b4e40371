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

#include "steklov/shell_functionals.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <thread>

#include "steklov/error.hpp"
#include "steklov/geodesic_trig.hpp"
#include "steklov/radial.hpp"

namespace steklov {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kStrictFactor = 10.0;

// sin^(m-2) theta
double polar_weight(int m, double theta) {
  return m == 2 ? 1.0 : std::pow(std::sin(theta), m - 2);
}

// |S^(m-2)|, the measure of the (m-2)-sphere of directions orthogonal to the axis.
double axial_factor(int m) { return unit_sphere_area(m - 1); }

// Radial profile long enough to reach every point of the outer sphere from C.
RadialProfile profile_for(const ShellGeometry& g, const QuadratureConfig& cfg) {
  return first_radial(g.space(), g.r1(), g.r2() + g.d(), cfg);
}

Integral scaled(Integral in, double factor) {
  return {in.value * factor, in.error * std::abs(factor)};
}

Integral functional_D_impl(const ShellGeometry& g, const RadialProfile& a,
                           const QuadratureConfig& cfg) {
  const int m = g.space().m();
  const auto integrand = [&](double psi) {
    const double v = a.at(r_from_outer_center(g, psi));
    return v * v * polar_weight(m, psi);
  };
  return scaled(integrate(integrand, 0.0, kPi, cfg), axial_factor(m) * density(g.space(), g.r2()));
}

Integral functional_D_radon_impl(const ShellGeometry& g, const RadialProfile& a,
                                 const QuadratureConfig& cfg) {
  const int m = g.space().m();
  const Curvature kappa = g.space().curvature();
  const auto integrand = [&](double theta) {
    const double rho = boundary_distance(kappa, g.d(), g.r2(), theta);
    const double lambda = g.d() == 0.0 ? 0.0 : angle_from_sss(kappa, g.d(), rho, g.r2());
    const double cos_lambda = std::cos(lambda);
    if (!(cos_lambda > 0.0)) {
      std::ostringstream os;
      os.precision(17);
      os << "boundary angle " << lambda << " is not acute at theta = " << theta;
      throw InvariantViolation(os.str());
    }
    const double v = a.at(rho);
    return v * v * density(g.space(), rho) / cos_lambda * polar_weight(m, theta);
  };
  return scaled(integrate(integrand, 0.0, kPi, cfg), axial_factor(m));
}

Integral functional_N_impl(const ShellGeometry& g, const RadialProfile& a,
                           const QuadratureConfig& cfg) {
  const int m = g.space().m();
  const Curvature kappa = g.space().curvature();
  const auto integrand = [&](double theta) {
    return a.at(boundary_distance(kappa, g.d(), g.r2(), theta)) * polar_weight(m, theta);
  };
  return scaled(integrate(integrand, 0.0, kPi, cfg), axial_factor(m));
}

void require_constant_curvature(const ModelSpace& space) { static_cast<void>(space.curvature()); }

double q_error(const SweepRecord& r) {
  return r.Q * (r.err_N / r.N + r.err_D / r.D);
}

}  // namespace

ShellGeometry ShellGeometry::make(const ModelSpace& space, double r1, double r2, double d) {
  if (!(r1 > 0.0) || !(r1 < r2)) throw DomainError("shell radii must satisfy 0 < R1 < R2");
  if (!max_outer_radius(space).admits(r2))
    throw DomainError("outer radius must stay below half the injectivity radius");
  if (!(d >= 0.0)) throw DomainError("displacement d must be non-negative");
  if (!(d + r1 < r2)) throw DomainError("inner ball must lie inside the outer ball (d + R1 < R2)");
  return ShellGeometry(space, r1, r2, d);
}

double r_from_outer_center(const ShellGeometry& g, double psi) {
  const Curvature kappa = g.space().curvature();
  if (!(psi >= 0.0 && psi <= kPi)) throw DomainError("angle must lie in [0, pi]");
  if (g.d() == 0.0) return g.r2();
  return side_from_sas(kappa, g.d(), g.r2(), psi);
}

Integral functional_D(const ShellGeometry& g, const QuadratureConfig& cfg) {
  require_constant_curvature(g.space());
  return functional_D_impl(g, profile_for(g, cfg), cfg);
}

Integral functional_D_via_radon(const ShellGeometry& g, const QuadratureConfig& cfg) {
  require_constant_curvature(g.space());
  return functional_D_radon_impl(g, profile_for(g, cfg), cfg);
}

Integral functional_N(const ShellGeometry& g, const QuadratureConfig& cfg) {
  require_constant_curvature(g.space());
  return functional_N_impl(g, profile_for(g, cfg), cfg);
}

SweepRecord rayleigh_Q(const ShellGeometry& g, const QuadratureConfig& cfg) {
  require_constant_curvature(g.space());
  const auto a = profile_for(g, cfg);
  const auto n = functional_N_impl(g, a, cfg);
  const auto dd = functional_D_impl(g, a, cfg);
  const auto d_alt = functional_D_radon_impl(g, a, cfg);

  SweepRecord rec;
  rec.d = g.d();
  rec.N = n.value;
  rec.D = dd.value;
  rec.D_alt = d_alt.value;
  rec.Q = n.value / dd.value;
  rec.err_N = n.error;
  rec.err_D = dd.error;
  rec.err_D_alt = d_alt.error;
  rec.quad_err = n.error + dd.error + d_alt.error;
  rec.sigma1_concentric = 1.0 / (density(g.space(), g.r2()) * a.at(g.r2()));
  rec.newton_residual = newton_shell_residual(g.space(), g.r2(), g.d(), cfg);
  if (!(rec.N > 0.0 && rec.D > 0.0 && rec.D_alt > 0.0))
    throw InvariantViolation("shell functionals must be positive");
  return rec;
}

double newton_shell_residual(const ModelSpace& space, double r2, double x,
                             const QuadratureConfig& cfg) {
  const Curvature kappa = space.curvature();
  if (!max_outer_radius(space).admits(r2) || !(r2 > 0.0))
    throw DomainError("sphere radius must lie in (0, inj/2)");
  if (!(x >= 0.0 && x < r2)) throw DomainError("point must satisfy 0 <= x < R2");
  const int m = space.m();
  const auto integrand = [&](double psi) {
    // psi at the center, measured from the ray toward X.
    double dist = r2;
    double cos_alpha = -std::cos(psi);
    if (x > 0.0) {
      dist = side_from_sas(kappa, x, r2, psi);
      cos_alpha = std::cos(angle_from_sss(kappa, r2, x, dist));
    }
    return cos_alpha / density(space, dist) * polar_weight(m, psi);
  };
  return axial_factor(m) * density(space, r2) * integrate(integrand, 0.0, kPi, cfg).value;
}

std::vector<double> default_d_grid(double r1, double r2, int steps) {
  if (steps < 1) throw DomainError("a displacement grid needs at least one point");
  if (!(r1 < r2)) throw DomainError("default grid needs R1 < R2");
  std::vector<double> grid(steps, 0.0);
  const double top = 0.95 * (r2 - r1);
  for (int i = 1; i < steps; ++i) grid[i] = top * i / (steps - 1);
  return grid;
}

SweepResult sweep(const ShellGeometry& base, std::span<const double> d_values,
                  const QuadratureConfig& cfg, int threads) {
  if (d_values.empty()) throw DomainError("sweep needs at least one displacement");
  SweepResult out{base, std::vector<SweepEntry>(d_values.size()),
                  rayleigh_Q(base.with_displacement(0.0), cfg), {}};

  const auto evaluate = [&](std::size_t i) {
    auto& entry = out.entries[i];
    entry.d = d_values[i];
    try {
      entry.record = rayleigh_Q(base.with_displacement(d_values[i]), cfg);
    } catch (const Error& e) {
      entry.error = e.what();
    }
  };

  const int workers = std::clamp(threads, 1, static_cast<int>(d_values.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < d_values.size(); ++i) evaluate(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < d_values.size(); i = next++) evaluate(i);
      });
    }
  }

  // Inequality flags over the entries sorted by displacement.
  auto& f = out.flags;
  const SweepRecord& ref = out.reference;
  const double ref_q_err = q_error(ref);
  std::vector<SweepEntry*> sorted;
  for (auto& e : out.entries) {
    if (e.record) {
      sorted.push_back(&e);
    } else {
      f.complete = false;
    }
  }
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const SweepEntry* a, const SweepEntry* b) { return a->d < b->d; });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    SweepEntry& e = *sorted[i];
    const SweepRecord& r = *e.record;
    if (r.d > 0.0) {
      e.checks.n_below_reference = ref.N - r.N > kStrictFactor * (ref.err_N + r.err_N);
      e.checks.q_below_reference = ref.Q - r.Q > kStrictFactor * (ref_q_err + q_error(r));
      f.n_bounded = f.n_bounded && e.checks.n_below_reference;
      f.q_bounded = f.q_bounded && e.checks.q_below_reference;
    }
    if (i == 0 || sorted[i - 1]->d == r.d) continue;
    const SweepRecord& prev = *sorted[i - 1]->record;
    e.checks.d_above_previous = r.D - prev.D > kStrictFactor * (r.err_D + prev.err_D);
    f.d_increasing = f.d_increasing && e.checks.d_above_previous;
    if (r.Q > prev.Q + kStrictFactor * (q_error(r) + q_error(prev))) f.q_monotone = false;
  }
  return out;
}

double cap_measure(int m, double t) {
  if (m < 2) throw DomainError("cap_measure needs m >= 2");
  if (!(t >= 0.0 && t <= kPi)) throw DomainError("cap angle must lie in [0, pi]");
  // I_n(t) = int_0^t sin^n, via I_n = -sin^(n-1) t cos t / n + (n-1)/n I_(n-2)
  const int n = m - 2;
  const double st = std::sin(t);
  const double ct = std::cos(t);
  double even = t;
  double odd = 1.0 - ct;
  double value = n % 2 == 0 ? even : odd;
  for (int j = n % 2 == 0 ? 2 : 3; j <= n; j += 2) {
    value = -std::pow(st, j - 1) * ct / j + (j - 1.0) / j * value;
  }
  return axial_factor(m) * value;
}

CapComparison cap_measure_compare(const ModelSpace& space, double r2, double d, double s) {
  if (space.curvature() != Curvature::Spherical)
    throw UnsupportedFamilyError("cap comparison needs a spherical constant-curvature space");
  if (!(r2 > 0.0) || !max_outer_radius(space).admits(r2))
    throw DomainError("R2 must lie in (0, inj/2)");
  if (d == 0.0 && s == 0.0) return {0.0, 0.0, true};
  if (!(s > 0.0 && s <= d && d < r2)) throw DomainError("cap comparison needs 0 < s <= d < R2");

  const Curvature kappa = Curvature::Spherical;
  const int m = space.m();
  // Angle at C between C->C' and the direction where the sphere about C of
  // the given radius crosses the sphere of radius R2 about C'.
  const auto crossing = [&](double radius) { return angle_from_sss(kappa, r2, d, radius); };
  CapComparison out;
  out.left = cap_measure(m, crossing(r2 + s));
  out.right = unit_sphere_area(m) - cap_measure(m, crossing(r2 - s));
  out.ok = out.left <= out.right + 1e-14 * unit_sphere_area(m);
  return out;
}

bool omega_asymmetry(const ModelSpace& space, double r2, std::span<const double> s_grid) {
  if (!(r2 > 0.0) || !max_outer_radius(space).admits(r2))
    throw DomainError("R2 must lie in (0, inj/2)");
  bool all = true;
  for (double s : s_grid) {
    if (!(s > 0.0 && s < r2)) throw DomainError("grid values must satisfy 0 < s < R2");
    if (!(density(space, r2 - s) < density(space, r2 + s))) all = false;
  }
  return all;
}

}  // namespace steklov
