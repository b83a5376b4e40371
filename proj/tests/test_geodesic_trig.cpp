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

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "steklov/error.hpp"
#include "steklov/geodesic_trig.hpp"

using namespace steklov;

namespace {

constexpr double kPi = std::numbers::pi;
using Vec3 = std::array<double, 3>;

// Point at geodesic distance t from the base point in direction angle phi,
// embedded in R^2 (flat), the unit sphere in R^3, or the hyperboloid
// x0^2 + x1^2 - x2^2 = -1.
Vec3 embed(Curvature k, double t, double phi) {
  switch (k) {
    case Curvature::Flat:
      return {t * std::cos(phi), t * std::sin(phi), 0.0};
    case Curvature::Spherical:
      return {std::sin(t) * std::cos(phi), std::sin(t) * std::sin(phi), std::cos(t)};
    case Curvature::Hyperbolic:
      return {std::sinh(t) * std::cos(phi), std::sinh(t) * std::sin(phi), std::cosh(t)};
  }
  return {};
}

double embedded_distance(Curvature k, const Vec3& a, const Vec3& b) {
  switch (k) {
    case Curvature::Flat:
      return std::hypot(a[0] - b[0], a[1] - b[1]);
    case Curvature::Spherical: {
      const Vec3 c = {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                      a[0] * b[1] - a[1] * b[0]};
      const double cross = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
      return std::atan2(cross, a[0] * b[0] + a[1] * b[1] + a[2] * b[2]);
    }
    case Curvature::Hyperbolic: {
      // Minkowski distance via the chord: 2 asinh(|a - b|_M / 2) is stable for
      // nearby points.
      const double d0 = a[0] - b[0], d1 = a[1] - b[1], d2 = a[2] - b[2];
      const double chord2 = d0 * d0 + d1 * d1 - d2 * d2;
      return 2.0 * std::asinh(std::sqrt(std::max(chord2, 0.0)) / 2.0);
    }
  }
  return 0.0;
}

double sas_oracle(Curvature k, double q, double r, double angle) {
  return embedded_distance(k, embed(k, q, 0.0), embed(k, r, angle));
}

const Curvature kAllK[] = {Curvature::Hyperbolic, Curvature::Flat, Curvature::Spherical};

}  // namespace

TEST_CASE("side from two sides and the enclosed angle: examples") {
  CHECK(side_from_sas(Curvature::Flat, 3.0, 4.0, kPi / 2) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(side_from_sas(Curvature::Spherical, kPi / 2, kPi / 2, kPi / 2) ==
        doctest::Approx(kPi / 2).epsilon(1e-15));
  const double c1 = std::cosh(1.0), s1 = std::sinh(1.0);
  const double closed = std::acosh(c1 * c1 - 0.5 * s1 * s1);
  const double h = side_from_sas(Curvature::Hyperbolic, 1.0, 1.0, kPi / 3);
  CHECK(h == doctest::Approx(closed).epsilon(1e-14));
  CHECK(h == doctest::Approx(sas_oracle(Curvature::Hyperbolic, 1.0, 1.0, kPi / 3)).epsilon(1e-14));
}

TEST_CASE("side from SAS agrees with embedded distances") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (Curvature k : kAllK) {
    const double top = k == Curvature::Spherical ? kPi - 1e-3 : 4.0;
    for (int i = 0; i < 2000; ++i) {
      const double q = 1e-3 + top * unit(rng);
      const double r = 1e-3 + top * unit(rng);
      const double angle = kPi * unit(rng);
      const double side = side_from_sas(k, q, r, angle);
      const double oracle = sas_oracle(k, q, r, angle);
      INFO("kappa " << static_cast<int>(k) << " q " << q << " r " << r << " angle " << angle);
      CHECK(std::abs(side - oracle) < 1e-10 * std::max(1.0, oracle));
    }
  }
}

TEST_CASE("collinear configurations give sums and differences") {
  for (Curvature k : kAllK) {
    const auto far = solve_sas(k, 0.3, 0.7, kPi);
    const auto near = solve_sas(k, 0.3, 0.7, 0.0);
    CHECK(far.collinear);
    CHECK(near.collinear);
    CHECK(far.side == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(near.side == doctest::Approx(0.4).epsilon(1e-15));
    CHECK_FALSE(solve_sas(k, 0.3, 0.7, 1.0).collinear);
  }
}

TEST_CASE("side from SAS preconditions") {
  CHECK_THROWS_AS(solve_sas(Curvature::Flat, 0.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(solve_sas(Curvature::Flat, 1.0, 1.0, -0.1), DomainError);
  CHECK_THROWS_AS(solve_sas(Curvature::Flat, 1.0, 1.0, 3.2), DomainError);
  CHECK_THROWS_AS(solve_sas(Curvature::Spherical, kPi, 1.0, 1.0), DomainError);
}

TEST_CASE("angle from three sides: examples") {
  CHECK(angle_from_sss(Curvature::Flat, 5.0, 3.0, 4.0) == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(angle_from_sss(Curvature::Flat, 1.0, 1.0, 1.0) == doctest::Approx(kPi / 3).epsilon(1e-15));
  CHECK(angle_from_sss(Curvature::Spherical, kPi / 2, kPi / 2, kPi / 2) ==
        doctest::Approx(kPi / 2).epsilon(1e-15));
  // isoceles with a vanishing third side: the apex angle goes to zero
  CHECK(angle_from_sss(Curvature::Flat, 1e-9, 1.0, 1.0) < 1e-8);
  CHECK(angle_from_sss(Curvature::Flat, 1.0, 2.0, 3.0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(angle_from_sss(Curvature::Flat, 5.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(angle_from_sss(Curvature::Hyperbolic, 0.1, 1.0, 3.0), DomainError);
  CHECK_THROWS_AS(angle_from_sss(Curvature::Spherical, 3.5, 1.0, 3.0), DomainError);
}

TEST_CASE("SAS and SSS are mutually inverse") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (Curvature k : kAllK) {
    const double top = k == Curvature::Spherical ? 1.5 : 3.0;
    for (int i = 0; i < 2000; ++i) {
      const double q = 0.05 + top * unit(rng);
      const double r = 0.05 + top * unit(rng);
      const double angle = 0.05 + (kPi - 0.1) * unit(rng);
      const double p = side_from_sas(k, q, r, angle);
      CHECK(std::abs(angle_from_sss(k, p, q, r) - angle) < 1e-10);
    }
  }
}

TEST_CASE("boundary distance examples") {
  for (Curvature k : kAllK) {
    for (double theta : {0.0, 0.4, kPi / 2, 2.9, kPi}) CHECK(boundary_distance(k, 0.0, 1.2, theta) == 1.2);
    CHECK(boundary_distance(k, 0.3, 1.2, kPi) == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(boundary_distance(k, 0.3, 1.2, 0.0) == doctest::Approx(1.5).epsilon(1e-15));
  }
  CHECK(boundary_distance(Curvature::Flat, 0.5, 2.0, kPi / 2) ==
        doctest::Approx(std::sqrt(3.75)).epsilon(1e-15));
}

TEST_CASE("boundary distance lands on the outer sphere") {
  // C at the base point, C' at distance d in direction 0, P at distance rho
  // in direction theta; the embedded distance |C'P| must equal R2.
  for (Curvature k : kAllK) {
    const double r2_top = k == Curvature::Spherical ? 1.55 : 3.0;
    for (double r2 : {0.2, 0.8, r2_top}) {
      for (double frac : {0.0, 0.1, 0.5, 0.9, 0.999}) {
        const double d = frac * r2;
        double previous = std::numeric_limits<double>::infinity();
        for (int i = 0; i <= 64; ++i) {
          const double theta = kPi * i / 64;
          const double rho = boundary_distance(k, d, r2, theta);
          const double check = embedded_distance(k, embed(k, d, 0.0), embed(k, rho, theta));
          INFO("kappa " << static_cast<int>(k) << " R2 " << r2 << " d " << d << " theta " << theta);
          CHECK(std::abs(check - r2) < 1e-10);
          if (d > 0.0) CHECK(std::abs(side_from_sas(k, d, rho, theta) - r2) < 1e-10);
          if (d > 0.0) CHECK(rho < previous);
          previous = rho;
        }
      }
    }
  }
}

TEST_CASE("boundary distance preconditions") {
  CHECK_THROWS_AS(boundary_distance(Curvature::Flat, 1.0, 1.0, 0.3), DomainError);
  CHECK_THROWS_AS(boundary_distance(Curvature::Flat, -0.1, 1.0, 0.3), DomainError);
  CHECK_THROWS_AS(boundary_distance(Curvature::Spherical, 0.1, kPi / 2, 0.3), DomainError);
  CHECK_THROWS_AS(boundary_distance(Curvature::Flat, 0.1, 1.0, 3.5), DomainError);
}

TEST_CASE("angle opposite the not-larger side is acute") {
  CHECK(acute_angle_check(Curvature::Flat, 10000));
  CHECK(acute_angle_check(Curvature::Spherical, 10000));
  CHECK(acute_angle_check(Curvature::Hyperbolic, 10000));
  CHECK(acute_angle_check(Curvature::Spherical, 1000, 12345));
  CHECK_THROWS_AS(acute_angle_check(Curvature::Flat, 0), DomainError);
}

TEST_CASE("the acuteness bound is sharp beyond a quarter circle on the sphere") {
  // Base angles of an isoceles triangle with legs longer than pi/2 are obtuse.
  const double angle = angle_from_sss(Curvature::Spherical, 2.0, 2.0, 0.5);
  CHECK(angle > kPi / 2);
}

TEST_CASE("chord symmetry about an interior point") {
  CHECK(chord_symmetry_check(Curvature::Flat, 0.0, 2.0, 100));
  CHECK(chord_symmetry_check(Curvature::Flat, 0.5, 2.0, 2000));
  CHECK(chord_symmetry_check(Curvature::Spherical, 1.0, 1.5, 2000));
  CHECK(chord_symmetry_check(Curvature::Hyperbolic, 2.5, 3.0, 2000));
  CHECK(chord_symmetry_check(Curvature::Flat, 0.95, 1.0, 5000, 99));
  // far and near axis points
  CHECK(boundary_distance(Curvature::Flat, 0.5, 2.0, 0.0) == 2.5);
  CHECK(boundary_distance(Curvature::Flat, 0.5, 2.0, kPi) == 1.5);
  CHECK_THROWS_AS(chord_symmetry_check(Curvature::Flat, 2.0, 2.0, 10), DomainError);
}

TEST_CASE("boundary angle against an embedded computation") {
  // Angle at P between P->X and P->C' computed from tangent vectors in the plane.
  const double d = 0.6, r2 = 1.0;
  for (double beta : {0.1, 0.7, 1.3, 2.0, 2.9}) {
    const double rho = boundary_distance(Curvature::Flat, d, r2, beta);
    const Vec3 x = {0.0, 0.0, 0.0}, c = {d, 0.0, 0.0};
    const Vec3 p = embed(Curvature::Flat, rho, beta);
    const double ux = x[0] - p[0], uy = x[1] - p[1], vx = c[0] - p[0], vy = c[1] - p[1];
    const double embedded = std::atan2(std::abs(ux * vy - uy * vx), ux * vx + uy * vy);
    CHECK(angle_from_sss(Curvature::Flat, d, rho, r2) == doctest::Approx(embedded).epsilon(1e-12));
    CHECK(embedded < kPi / 2);
  }
}
