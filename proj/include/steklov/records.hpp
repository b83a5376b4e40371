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

#include <filesystem>
#include <iosfwd>
#include <string>

#include "steklov/shell_functionals.hpp"

namespace steklov {

enum class RecordFormat { Csv, Json };

/// 17 significant digits, shortest %g-style form, independent of locale.
/// Non-finite values print as nan, inf or -inf.
std::string format_number(double x);

/// Column order of the sweep output.
inline constexpr const char* kRecordHeader =
    "space,m,k,R1,R2,d,N,D,D_alt,Q,sigma1_concentric,newton_residual,quad_err";

/// Writes the successful entries of a sweep in input order, as CSV (header +
/// one row per record) or as a JSON array of flat objects with the same keys.
/// With `with_checks`, a trailing `flags` column/key lists the comparisons
/// that hold for the row: D_up, N_lt_N0, Q_lt_Q0 (`reference` at d = 0).
/// Throws DomainError when no entry has a record.
void emit_records(std::ostream& out, const SweepResult& sweep, RecordFormat format,
                  bool with_checks = false);

std::string render_records(const SweepResult& sweep, RecordFormat format,
                           bool with_checks = false);

/// emit_records into a file; IoError carries the path.
void write_records(const std::filesystem::path& path, const SweepResult& sweep,
                   RecordFormat format, bool with_checks = false);

}  // namespace steklov
