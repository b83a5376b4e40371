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

#include "steklov/model_space.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "steklov/error.hpp"

namespace steklov {

namespace {

int field_dimension(Family f) {
  switch (f) {
    case Family::ComplexProjective:
    case Family::ComplexHyperbolic:
      return 2;
    case Family::QuaternionicProjective:
    case Family::QuaternionicHyperbolic:
      return 4;
    case Family::OctonionicProjective:
    case Family::OctonionicHyperbolic:
      return 8;
    default:
      return 1;
  }
}

std::string describe(double r) { return std::to_string(r); }

void check_radius(const ModelSpace& space, double r) {
  if (!(r > 0.0)) throw DomainError("radius must be positive, got " + describe(r));
  const auto inj = space.injectivity_radius();
  if (!inj.admits(r)) {
    throw DomainError("radius " + describe(r) + " is not below the injectivity radius " +
                      describe(inj.value()));
  }
}

}  // namespace

ModelSpace ModelSpace::make(Family family, int dim) {
  const int k = field_dimension(family);
  switch (family) {
    case Family::Euclidean:
    case Family::Sphere:
      if (dim < 2) throw DomainError("dimension must be at least 2");
      return ModelSpace(family, dim, dim, 1);
    case Family::OctonionicProjective:
    case Family::OctonionicHyperbolic:
      if (dim != 2) throw DomainError("octonionic planes exist only for n = 2");
      return ModelSpace(family, 2, 16, 8);
    default:
      if (dim < 2) throw DomainError("rank parameter n must be at least 2");
      return ModelSpace(family, dim, dim * k, k);
  }
}

RadiusBound ModelSpace::injectivity_radius() const {
  switch (family_) {
    case Family::Sphere:
      return RadiusBound::finite(std::numbers::pi);
    case Family::RealProjective:
    case Family::ComplexProjective:
    case Family::QuaternionicProjective:
    case Family::OctonionicProjective:
      return RadiusBound::finite(std::numbers::pi / 2.0);
    default:
      return RadiusBound::unbounded();
  }
}

bool ModelSpace::compact() const noexcept {
  switch (family_) {
    case Family::Sphere:
    case Family::RealProjective:
    case Family::ComplexProjective:
    case Family::QuaternionicProjective:
    case Family::OctonionicProjective:
      return true;
    default:
      return false;
  }
}

bool ModelSpace::noncompact() const noexcept {
  return family_ != Family::Euclidean && !compact();
}

Curvature ModelSpace::curvature() const {
  if (!constant_curvature()) {
    throw UnsupportedFamilyError("space '" + std::string(name()) +
                                 "' does not have constant curvature");
  }
  if (family_ == Family::Euclidean) return Curvature::Flat;
  return compact() ? Curvature::Spherical : Curvature::Hyperbolic;
}

std::string_view ModelSpace::name() const noexcept {
  switch (family_) {
    case Family::Euclidean: return "euclidean";
    case Family::Sphere: return "sphere";
    case Family::RealProjective: return "rp";
    case Family::ComplexProjective: return "cp";
    case Family::QuaternionicProjective: return "hp";
    case Family::OctonionicProjective: return "op2";
    case Family::RealHyperbolic: return "rh";
    case Family::ComplexHyperbolic: return "ch";
    case Family::QuaternionicHyperbolic: return "hh";
    case Family::OctonionicHyperbolic: return "oh2";
  }
  return "?";
}

double ModelSpace::s(double r) const noexcept {
  if (family_ == Family::Euclidean) return r;
  return compact() ? std::sin(r) : std::sinh(r);
}

double ModelSpace::s_prime(double r) const noexcept {
  if (family_ == Family::Euclidean) return 1.0;
  return compact() ? std::cos(r) : std::cosh(r);
}

double ModelSpace::c(double r) const noexcept {
  if (k_ == 1) return 1.0;
  return compact() ? std::cos(r) : std::cosh(r);
}

double ModelSpace::c_prime(double r) const noexcept {
  if (k_ == 1) return 0.0;
  return compact() ? -std::sin(r) : std::sinh(r);
}

Family parse_family(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "euclidean") return Family::Euclidean;
  if (lower == "sphere") return Family::Sphere;
  if (lower == "rp") return Family::RealProjective;
  if (lower == "cp") return Family::ComplexProjective;
  if (lower == "hp") return Family::QuaternionicProjective;
  if (lower == "op2") return Family::OctonionicProjective;
  if (lower == "rh") return Family::RealHyperbolic;
  if (lower == "ch") return Family::ComplexHyperbolic;
  if (lower == "hh") return Family::QuaternionicHyperbolic;
  if (lower == "oh2") return Family::OctonionicHyperbolic;
  throw DomainError("unknown space family '" + std::string(name) + "'");
}

double density(const ModelSpace& space, double r) {
  check_radius(space, r);
  const double sv = std::pow(space.s(r), space.m() - 1);
  return space.k() == 1 ? sv : sv * std::pow(space.c(r), space.k() - 1);
}

double density_derivative(const ModelSpace& space, double r) {
  check_radius(space, r);
  const int m = space.m();
  const int k = space.k();
  const double s = space.s(r);
  const double c = space.c(r);
  // d/dr [s^(m-1) c^(k-1)]
  double result = (m - 1) * std::pow(s, m - 2) * space.s_prime(r) * std::pow(c, k - 1);
  if (k > 1) result += (k - 1) * std::pow(s, m - 1) * std::pow(c, k - 2) * space.c_prime(r);
  return result;
}

RadiusBound max_outer_radius(const ModelSpace& space) {
  return space.injectivity_radius().halved();
}

double unit_sphere_area(int m) {
  if (m < 1) throw DomainError("unit sphere area needs m >= 1");
  const double half = 0.5 * m;
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

}  // namespace steklov
