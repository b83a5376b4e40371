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

#include <utility>
#include <vector>

#include "steklov/model_space.hpp"
#include "steklov/quadrature.hpp"

namespace steklov {

/// A radial factor a(r) of a harmonic function a(r) f(theta) vanishing on the
/// inner sphere r = R1, sampled on an increasing grid starting at R1.
///
/// For mode 0, a(r) = integral_{R1}^{r} 1/omega and the profile can be
/// evaluated anywhere in [R1, r_max] via at(). Higher modes come from the
/// ODE integrator and are normalized by a'(R1) = 1; only ratios such as
/// a'/a are meaningful for them.
class RadialProfile {
 public:
  RadialProfile(ModelSpace space, double r1, int mode, std::vector<double> grid,
                std::vector<double> a, std::vector<double> a_prime,
                QuadratureConfig cfg = {});

  const ModelSpace& space() const noexcept { return space_; }
  double r1() const noexcept { return r1_; }
  double r_max() const noexcept { return grid_.back(); }
  int mode() const noexcept { return mode_; }
  const std::vector<double>& grid() const noexcept { return grid_; }
  const std::vector<double>& values() const noexcept { return a_; }
  const std::vector<double>& derivatives() const noexcept { return a_prime_; }

  /// a(r) for r in [R1, r_max]. Mode 0 only: grid value plus quadrature
  /// from the nearest grid point below.
  double at(double r) const;

  /// a'(r_max) / a(r_max), the Steklov eigenvalue on the outer sphere.
  double steklov_ratio() const { return a_prime_.back() / a_.back(); }

 private:
  ModelSpace space_;
  double r1_;
  int mode_;
  std::vector<double> grid_;
  std::vector<double> a_;
  std::vector<double> a_prime_;
  QuadratureConfig cfg_;
};

/// First (rotationally symmetric) radial factor by cumulative quadrature of
/// 1/omega on a uniform grid. Requires 0 < r1 < r_max < inj.
RadialProfile first_radial(const ModelSpace& space, double r1, double r_max,
                           const QuadratureConfig& cfg = {}, int grid_cells = 64);

/// 1 / (omega(R2) a(R2)): first mixed Steklov-Dirichlet eigenvalue of the
/// concentric shell. Requires 0 < R1 < R2 < inj/2.
double sigma1_concentric(const ModelSpace& space, double r1, double r2,
                         const QuadratureConfig& cfg = {});

/// Radial factor of the mode-l solution of
///   a'' + (omega'/omega) a' - l(l+m-2)/s(r)^2 a = 0,  a(R1) = 0, a'(R1) = 1
/// on [R1, R2] by fixed-step RK4. `ode_step` <= 0 selects (R2-R1)/4096.
/// Modes l > 0 require a constant-curvature space.
RadialProfile radial_mode(const ModelSpace& space, double r1, double r2, int l,
                          double ode_step = 0.0);

struct ModeOrdering {
  std::vector<std::pair<int, double>> sigmas;  ///< (l, sigma_l), l = 0..l_max
  bool first_is_smallest = true;  ///< sigma_0 < sigma_l for every l >= 1
  bool strictly_increasing = true;  ///< sigma_0 < sigma_1 < ... < sigma_lmax
};

ModeOrdering mode_ordering_check(const ModelSpace& space, double r1, double r2, int l_max,
                                 double ode_step = 0.0);

}  // namespace steklov
