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

#include <optional>
#include <string>
#include <string_view>

namespace steklov {

/// The two-point homogeneous spaces: Euclidean space plus the compact and
/// noncompact rank-one symmetric spaces over R, C, H and O.
enum class Family {
  Euclidean,
  Sphere,
  RealProjective,
  ComplexProjective,
  QuaternionicProjective,
  OctonionicProjective,
  RealHyperbolic,
  ComplexHyperbolic,
  QuaternionicHyperbolic,
  OctonionicHyperbolic,
};

/// Sign of the sectional curvature for the constant-curvature families.
enum class Curvature : int { Hyperbolic = -1, Flat = 0, Spherical = 1 };

/// A radius bound that is either a finite positive number or unbounded.
class RadiusBound {
 public:
  static RadiusBound finite(double value) { return RadiusBound(value); }
  static RadiusBound unbounded() { return RadiusBound(); }

  bool bounded() const noexcept { return value_.has_value(); }
  /// Only meaningful when bounded().
  double value() const { return *value_; }
  /// True iff r < bound.
  bool admits(double r) const noexcept { return !value_ || r < *value_; }
  RadiusBound halved() const { return value_ ? finite(*value_ / 2.0) : unbounded(); }

  friend bool operator==(const RadiusBound&, const RadiusBound&) = default;

 private:
  RadiusBound() = default;
  explicit RadiusBound(double v) : value_(v) {}
  std::optional<double> value_;
};

/// One model space with its dimension data. Curvature is normalized so that
/// s(r) is sin r, sinh r or r.
class ModelSpace {
 public:
  /// `dim` is the real dimension m for Euclidean space and spheres, and the
  /// rank parameter n for the projective and hyperbolic families. For the
  /// octonionic planes `dim` must be 2.
  static ModelSpace make(Family family, int dim);

  Family family() const noexcept { return family_; }
  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  int k() const noexcept { return k_; }
  RadiusBound injectivity_radius() const;

  bool compact() const noexcept;
  bool noncompact() const noexcept;
  /// k == 1 families have constant sectional curvature.
  bool constant_curvature() const noexcept { return k_ == 1; }
  /// Throws UnsupportedFamilyError for k > 1 families.
  Curvature curvature() const;

  /// Short CLI name, e.g. "cp".
  std::string_view name() const noexcept;

  double s(double r) const noexcept;
  double s_prime(double r) const noexcept;
  /// Identically 1 for k == 1.
  double c(double r) const noexcept;
  double c_prime(double r) const noexcept;

  friend bool operator==(const ModelSpace&, const ModelSpace&) = default;

 private:
  ModelSpace(Family f, int n, int m, int k) : family_(f), n_(n), m_(m), k_(k) {}
  Family family_;
  int n_;
  int m_;
  int k_;
};

/// Parses `euclidean`, `sphere`, `rp`, `cp`, `hp`, `op2`, `rh`, `ch`, `hh`,
/// `oh2` (case-insensitive).
Family parse_family(std::string_view name);

/// omega(r) = s(r)^(m-1) c(r)^(k-1); requires 0 < r < inj.
double density(const ModelSpace& space, double r);

/// Analytic derivative of density().
double density_derivative(const ModelSpace& space, double r);

/// inj/2, the largest admissible outer radius.
RadiusBound max_outer_radius(const ModelSpace& space);

/// Surface measure of the unit sphere S^(m-1) in R^m.
double unit_sphere_area(int m);

}  // namespace steklov
