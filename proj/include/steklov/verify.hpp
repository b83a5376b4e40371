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
#include <string>
#include <vector>

namespace steklov {

struct VerifyOptions {
  std::uint64_t seed = 42;
  bool fast = false;  ///< coarser grids and fewer samples
  int threads = 1;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  ///< no commas or newlines
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  /// CSV `check,status,detail` with status pass or fail.
  std::string render() const;
};

/// Runs every property check of the library. The report depends only on the
/// options' seed and fast flag, not on the thread count.
VerifyReport run_verification(const VerifyOptions& options = {});

/// Names of the checks, in report order.
std::vector<std::string> verification_check_names();

}  // namespace steklov
