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
#include <utility>
#include <vector>

#include "steklov/error.hpp"

namespace steklov {

// Method of particular solutions for the planar eccentric annulus: the inner
// disk of radius R1 is centered at C = (0, 0), the outer disk of radius R2 at
// C' = (d, 0). The trial space is
//   1, log r_C, r_C^-j cos(j theta_C), r_C'^j cos(j theta_C'),  1 <= j <= N,
// i.e. cosine terms only, since the first eigenfunction is even about the
// axis through both centers.

struct MpsConfig {
  int basis_order = 24;  ///< N, harmonic terms per center
  int collocation_factor = 4;  ///< points per basis function on each circle
  /// Scan interval for sigma; defaults to (0.1, 1.5) x the concentric value.
  std::optional<std::pair<double, double>> sigma_bracket;
  int scan_points = 200;
  double refine_tol = 1e-10;
  int threads = 1;

  void validate() const;
};

using ScanTrace = std::vector<std::pair<double, double>>;  ///< (sigma, smallest singular value)

struct MpsResult {
  double sigma = 0.0;
  double min_singular_value = 0.0;
  ScanTrace scan_trace;
  int basis_order = 0;
  double column_norm_ratio = 0.0;  ///< largest / smallest basis column norm before scaling
  bool ill_conditioned = false;  ///< column_norm_ratio > 1e12
};

/// No local minimum of the singular-value curve inside the bracket.
class NoMinimumError : public NumericError {
 public:
  NoMinimumError(const std::string& what, ScanTrace trace)
      : NumericError(what), trace_(std::move(trace)) {}
  const ScanTrace& trace() const noexcept { return trace_; }

 private:
  ScanTrace trace_;
};

/// 1 / (R2 log(R2/R1)), the first eigenvalue of the concentric annulus.
double concentric_planar_sigma(double r1, double r2);

/// Smallest singular value of the column-normalized collocation matrix at a
/// trial sigma.
double mps_singular_value(double r1, double r2, double d, double sigma, const MpsConfig& cfg = {});

/// First mixed Steklov-Dirichlet eigenvalue of the eccentric annulus.
/// Requires 0 < R1 < R2 and 0 <= d < R2 - R1.
MpsResult solve_eccentric(double r1, double r2, double d, const MpsConfig& cfg = {});

}  // namespace steklov
