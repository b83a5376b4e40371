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
#include <span>
#include <string>
#include <vector>

#include "steklov/model_space.hpp"
#include "steklov/quadrature.hpp"

namespace steklov {

/// An inner ball of radius R1 about C inside an outer ball of radius R2
/// about C', with |CC'| = d. Invariants: 0 < R1 < R2 < inj/2, d >= 0 and
/// d + R1 < R2.
class ShellGeometry {
 public:
  static ShellGeometry make(const ModelSpace& space, double r1, double r2, double d);

  const ModelSpace& space() const noexcept { return space_; }
  double r1() const noexcept { return r1_; }
  double r2() const noexcept { return r2_; }
  double d() const noexcept { return d_; }

  ShellGeometry with_displacement(double d) const { return make(space_, r1_, r2_, d); }

 private:
  ShellGeometry(ModelSpace space, double r1, double r2, double d)
      : space_(space), r1_(r1), r2_(r2), d_(d) {}
  ModelSpace space_;
  double r1_;
  double r2_;
  double d_;
};

/// Functionals of the test function a(r_C) on the off-center shell.
struct SweepRecord {
  double d = 0.0;
  double N = 0.0;  ///< Dirichlet energy over the shell
  double D = 0.0;  ///< L2 norm squared on the outer sphere, C'-centered parametrization
  double D_alt = 0.0;  ///< same integral through the C-centered change of measure
  double Q = 0.0;  ///< N / D
  double sigma1_concentric = 0.0;
  double newton_residual = 0.0;
  double quad_err = 0.0;  ///< summed quadrature error estimates of N, D and D_alt
  double err_N = 0.0;
  double err_D = 0.0;
  double err_D_alt = 0.0;
};

/// r_C(P) for the outer-sphere point P at angle psi from the ray C'->C.
double r_from_outer_center(const ShellGeometry& geometry, double psi);

/// |S^(m-2)| omega(R2) int_0^pi a(r_C(psi))^2 sin^(m-2) psi dpsi
Integral functional_D(const ShellGeometry& geometry, const QuadratureConfig& cfg = {});

/// |S^(m-2)| int_0^pi a(rho)^2 omega(rho) / cos(lambda) sin^(m-2) theta dtheta,
/// where rho(theta) is the boundary distance from C and lambda the angle at
/// the boundary point between P->C and P->C'. Throws InvariantViolation if
/// cos(lambda) <= 0 is encountered.
Integral functional_D_via_radon(const ShellGeometry& geometry, const QuadratureConfig& cfg = {});

/// |S^(m-2)| int_0^pi a(rho(theta)) sin^(m-2) theta dtheta
Integral functional_N(const ShellGeometry& geometry, const QuadratureConfig& cfg = {});

/// All functionals for one configuration; Q(0) equals sigma1_concentric.
SweepRecord rayleigh_Q(const ShellGeometry& geometry, const QuadratureConfig& cfg = {});

/// Axial component of the integral of v_X / omega(r_X) over the sphere of
/// radius R2, for X at distance x from its center. Vanishes identically.
double newton_shell_residual(const ModelSpace& space, double r2, double x,
                             const QuadratureConfig& cfg = {});

/// Per-row outcome of the sweep comparisons (same strictness rule as SweepFlags).
struct RowChecks {
  bool d_above_previous = false;  ///< D exceeds D at the next smaller displacement
  bool n_below_reference = false;  ///< N(d) < N(0), d > 0
  bool q_below_reference = false;  ///< Q(d) < Q(0), d > 0
};

struct SweepEntry {
  double d = 0.0;
  std::optional<SweepRecord> record;
  std::string error;  ///< set when record is empty
  RowChecks checks;
};

/// Outcome of the inequality checks over a sweep. A comparison counts as
/// strict only when its gap exceeds 10x the summed quadrature error.
struct SweepFlags {
  bool complete = true;  ///< every entry evaluated without error
  bool d_increasing = true;  ///< D strictly increasing along the d grid
  bool n_bounded = true;  ///< N(d) <= N(0), strictly for d > 0
  bool q_bounded = true;  ///< Q(d) < Q(0) for d > 0
  bool q_monotone = true;  ///< diagnostic only: Q non-increasing along the grid
};

struct SweepResult {
  ShellGeometry base;
  std::vector<SweepEntry> entries;  ///< in input order
  SweepRecord reference;  ///< the concentric (d = 0) configuration
  SweepFlags flags;
};

/// `steps` uniform displacements on [0, 0.95 (R2 - R1)].
std::vector<double> default_d_grid(double r1, double r2, int steps = 17);

/// Evaluates rayleigh_Q at every displacement. Per-entry failures are
/// recorded, not thrown. Output is identical for any thread count.
SweepResult sweep(const ShellGeometry& base, std::span<const double> d_values,
                  const QuadratureConfig& cfg = {}, int threads = 1);

struct CapComparison {
  double left = 0.0;  ///< directions at C reaching outer-only points at distance R2 + s
  double right = 0.0;  ///< directions at C reaching inner-only points at distance R2 - s
  bool ok = true;
};

/// Measures (in the unit sphere of directions at C) of the two cap-shaped
/// sets where the balls of radius R2 about C and C' differ, at distances
/// R2 + s and R2 - s from C. Spherical constant-curvature spaces only.
CapComparison cap_measure_compare(const ModelSpace& space, double r2, double d, double s);

/// |S^(m-2)| int_0^t sin^(m-2) theta dtheta, the measure of a polar cap of
/// angular radius t in S^(m-1).
double cap_measure(int m, double t);

/// True iff omega(R2 - s) < omega(R2 + s) at every grid point.
bool omega_asymmetry(const ModelSpace& space, double r2, std::span<const double> s_grid);

}  // namespace steklov
