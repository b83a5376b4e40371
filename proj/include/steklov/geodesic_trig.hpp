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

#include <cstdint>

#include "steklov/model_space.hpp"

namespace steklov {

// Triangle conventions: side p is opposite vertex P, and the angle at P is
// enclosed by the sides q and r. Angles are Riemannian angles in [0, pi].
// For boundary parametrizations, an angle at the inner center C is measured
// from the ray C->C', and an angle at the outer center C' from the ray C'->C.

struct SasSolution {
  double side;
  bool collinear;  ///< the enclosed angle was 0 or pi
};

/// Law of cosines: the side opposite an angle enclosed by sides q and r.
/// Uses the haversine forms, which stay accurate for small results.
SasSolution solve_sas(Curvature kappa, double q, double r, double angle);

inline double side_from_sas(Curvature kappa, double q, double r, double angle) {
  return solve_sas(kappa, q, r, angle).side;
}

/// Angle at the vertex opposite side p (half-angle formula). Throws
/// DomainError when the sides violate the triangle inequality.
double angle_from_sss(Curvature kappa, double p, double q, double r);

/// Distance rho from C to the point P of the sphere of radius R2 about C',
/// where |CC'| = d and the angle at C between C->C' and C->P is theta.
/// rho(0) = R2 + d, rho(pi) = R2 - d.
double boundary_distance(Curvature kappa, double d, double r2, double theta);

/// Samples random triangles with p <= q (q < pi/2 when spherical) and checks
/// that the angle opposite p is acute.
bool acute_angle_check(Curvature kappa, int sample_count, std::uint64_t seed = 42);

/// For X at distance d from the center of a ball of radius R2, checks on
/// sampled boundary points P (direction at X within pi/2 of X->C') that the
/// angle at P in (P, X, C') is acute, that it matches the angle at the
/// opposite chord end -P, and that r_X(P) >= r_X(-P) with equality exactly at
/// the perpendicular direction.
bool chord_symmetry_check(Curvature kappa, double d, double r2, int sample_count,
                          std::uint64_t seed = 42);

}  // namespace steklov
