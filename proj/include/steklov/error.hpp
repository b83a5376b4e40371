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

#include <stdexcept>
#include <string>

namespace steklov {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation
/// (radius beyond the injectivity bound, non-positive side length, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The operation needs constant curvature (or another family property) the
/// selected space does not have.
class UnsupportedFamilyError : public Error {
 public:
  using Error::Error;
};

/// Iterative numerics (root finding, SVD sweeps, spectral scan) failed.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// A quantity that must hold by construction was observed violated.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Reading or writing a file failed; the message names the path.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature hit its depth limit before meeting tolerance. The
/// best available estimate is carried along.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_value, double best_error)
      : Error(what), best_value_(best_value), best_error_(best_error) {}

  double best_value() const noexcept { return best_value_; }
  double best_error() const noexcept { return best_error_; }

 private:
  double best_value_;
  double best_error_;
};

}  // namespace steklov
