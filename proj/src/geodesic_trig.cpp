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

#include "steklov/geodesic_trig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "steklov/error.hpp"

namespace steklov {

namespace {

constexpr double kPi = std::numbers::pi;

// sin, identity or sinh depending on curvature sign.
double gen_sin(Curvature kappa, double x) {
  switch (kappa) {
    case Curvature::Spherical: return std::sin(x);
    case Curvature::Hyperbolic: return std::sinh(x);
    case Curvature::Flat: break;
  }
  return x;
}

void check_side(Curvature kappa, double x, const char* what) {
  if (!(x > 0.0)) {
    std::ostringstream os;
    os << what << " must be positive, got " << x;
    throw DomainError(os.str());
  }
  if (kappa == Curvature::Spherical && !(x < kPi)) {
    std::ostringstream os;
    os << what << " must be below pi on the sphere, got " << x;
    throw DomainError(os.str());
  }
}

void check_angle(double angle) {
  if (!(angle >= 0.0 && angle <= kPi)) throw DomainError("angle must lie in [0, pi]");
}

}  // namespace

SasSolution solve_sas(Curvature kappa, double q, double r, double angle) {
  check_side(kappa, q, "side q");
  check_side(kappa, r, "side r");
  check_angle(angle);
  const double half_sin = std::sin(0.5 * angle);
  const double hav_angle = half_sin * half_sin;
  double side = 0.0;
  switch (kappa) {
    case Curvature::Flat: {
      const double diff = q - r;
      side = std::sqrt(diff * diff + 4.0 * q * r * hav_angle);
      break;
    }
    case Curvature::Spherical: {
      const double h0 = std::sin(0.5 * (q - r));
      const double h = std::clamp(h0 * h0 + std::sin(q) * std::sin(r) * hav_angle, 0.0, 1.0);
      side = 2.0 * std::asin(std::sqrt(h));
      break;
    }
    case Curvature::Hyperbolic: {
      const double h0 = std::sinh(0.5 * (q - r));
      const double h = h0 * h0 + std::sinh(q) * std::sinh(r) * hav_angle;
      side = 2.0 * std::asinh(std::sqrt(h));
      break;
    }
  }
  return {side, angle == 0.0 || angle == kPi};
}

double angle_from_sss(Curvature kappa, double p, double q, double r) {
  check_side(kappa, p, "side p");
  check_side(kappa, q, "side q");
  check_side(kappa, r, "side r");
  const double s = 0.5 * (p + q + r);
  const double slack = 1e-12 * std::max({p, q, r, 1.0});
  double sp = s - p;
  double sq = s - q;
  double sr = s - r;
  if (sp < -slack || sq < -slack || sr < -slack) {
    std::ostringstream os;
    os.precision(17);
    os << "sides (" << p << ", " << q << ", " << r << ") violate the triangle inequality";
    throw DomainError(os.str());
  }
  if (kappa == Curvature::Spherical && s > kPi + slack) {
    throw DomainError("spherical triangle perimeter exceeds 2 pi");
  }
  sp = std::max(sp, 0.0);
  sq = std::max(sq, 0.0);
  sr = std::max(sr, 0.0);
  const double num = gen_sin(kappa, sq) * gen_sin(kappa, sr);
  const double s_eff = kappa == Curvature::Spherical ? std::min(s, kPi) : s;
  const double den = gen_sin(kappa, s_eff) * gen_sin(kappa, sp);
  return 2.0 * std::atan2(std::sqrt(std::max(num, 0.0)), std::sqrt(std::max(den, 0.0)));
}

double boundary_distance(Curvature kappa, double d, double r2, double theta) {
  check_angle(theta);
  if (!(d >= 0.0) || !(d < r2)) throw DomainError("boundary_distance needs 0 <= d < R2");
  if (kappa == Curvature::Spherical && !(r2 < 0.5 * kPi))
    throw DomainError("boundary_distance needs R2 < pi/2 on the sphere");
  if (d == 0.0) return r2;

  const double ct = std::cos(theta);
  double rho = 0.0;
  switch (kappa) {
    case Curvature::Flat: {
      const double st = std::sin(theta);
      rho = d * ct + std::sqrt(r2 * r2 - d * d * st * st);
      break;
    }
    case Curvature::Spherical: {
      // cos d cos rho + sin d cos theta sin rho = cos R2
      const double a = std::cos(d);
      const double b = std::sin(d) * ct;
      const double amp = std::hypot(a, b);
      rho = std::atan2(b, a) + std::acos(std::clamp(std::cos(r2) / amp, -1.0, 1.0));
      break;
    }
    case Curvature::Hyperbolic: {
      // cosh d cosh rho - sinh d cos theta sinh rho = cosh R2
      const double a = std::cosh(d);
      const double b = std::sinh(d) * ct;
      const double amp = std::sqrt((a - b) * (a + b));
      rho = std::atanh(b / a) + std::acosh(std::max(std::cosh(r2) / amp, 1.0));
      break;
    }
  }

  const auto residual = [&](double x) { return side_from_sas(kappa, d, x, theta) - r2; };
  const double tol = 1e-13 * std::max(1.0, r2);
  if (rho > 0.0 && std::isfinite(rho) && std::abs(residual(rho)) <= tol) return rho;

  // Ill-conditioned closed form: bisect on the bracket [R2 - d, R2 + d].
  double lo = r2 - d;
  double hi = r2 + d;
  const double f_lo = residual(lo);
  const double f_hi = residual(hi);
  if (f_lo > tol || f_hi < -tol) {
    std::ostringstream os;
    os.precision(17);
    os << "boundary_distance: bracket [" << lo << ", " << hi << "] does not enclose a root"
       << " (residuals " << f_lo << ", " << f_hi << ")";
    throw NumericError(os.str());
  }
  for (int i = 0; i < 200 && hi - lo > 1e-16 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (residual(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

bool acute_angle_check(Curvature kappa, int sample_count, std::uint64_t seed) {
  if (sample_count < 1) throw DomainError("sample_count must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double q_max = kappa == Curvature::Spherical ? 0.5 * kPi : 6.0;
  for (int i = 0; i < sample_count; ++i) {
    double q = 0.0;
    while (!(q > 0.0)) q = q_max * unit(rng);
    const double p = q * (1.0 - unit(rng));  // (0, q]
    double r = 0.0;
    const double lo = q - p;
    const double hi = q + p;
    do {
      r = lo + (hi - lo) * unit(rng);
    } while (!(r > lo) || !(r > 0.0));
    if (!(angle_from_sss(kappa, p, q, r) < 0.5 * kPi)) return false;
  }
  return true;
}

bool chord_symmetry_check(Curvature kappa, double d, double r2, int sample_count,
                          std::uint64_t seed) {
  if (sample_count < 1) throw DomainError("sample_count must be at least 1");
  if (!(d >= 0.0) || !(d < r2)) throw DomainError("chord_symmetry_check needs 0 <= d < R2");
  constexpr double tol = 1e-10;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const auto angle_at_boundary = [&](double rho) {
    return d == 0.0 ? 0.0 : angle_from_sss(kappa, d, rho, r2);
  };
  const auto check_direction = [&](double beta) {
    // beta: angle at X between X->P and X->C'; -P lies in direction pi - beta.
    const double rho_p = boundary_distance(kappa, d, r2, beta);
    const double rho_m = boundary_distance(kappa, d, r2, kPi - beta);
    const double lam_p = angle_at_boundary(rho_p);
    const double lam_m = angle_at_boundary(rho_m);
    if (!(lam_p < 0.5 * kPi) || !(lam_m < 0.5 * kPi)) return false;
    // The angle from three sides loses accuracy like eps * d / (rho sin lambda)
    // as the triangle flattens (beta -> 0), so the match tolerance follows suit.
    const double conditioning = 16.0 * std::numeric_limits<double>::epsilon() * (d + r2) /
                                (std::min(rho_p, rho_m) * std::sin(std::max(lam_p, lam_m)));
    if (std::abs(lam_p - lam_m) > tol + conditioning) return false;
    if (rho_p < rho_m - tol) return false;
    const bool perpendicular = std::abs(beta - 0.5 * kPi) < 1e-12;
    if (perpendicular || d == 0.0) return std::abs(rho_p - rho_m) <= tol;
    if (std::abs(beta - 0.5 * kPi) > 1e-6 && !(rho_p > rho_m)) return false;
    return true;
  };

  if (!check_direction(0.0) || !check_direction(0.5 * kPi)) return false;
  for (int i = 0; i < sample_count; ++i) {
    if (!check_direction(0.5 * kPi * unit(rng))) return false;
  }
  return true;
}

}  // namespace steklov
