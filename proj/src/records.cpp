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

#include "steklov/records.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "steklov/error.hpp"

namespace steklov {

namespace {

std::string row_flags(const SweepEntry& e) {
  if (e.d == 0.0) return "reference";
  std::string out;
  const auto add = [&](bool on, const char* token) {
    if (!on) return;
    if (!out.empty()) out += ' ';
    out += token;
  };
  add(e.checks.d_above_previous, "D_up");
  add(e.checks.n_below_reference, "N_lt_N0");
  add(e.checks.q_below_reference, "Q_lt_Q0");
  return out;
}

std::vector<std::pair<const char*, double>> numeric_fields(const SweepResult& s,
                                                           const SweepRecord& r) {
  return {{"R1", s.base.r1()},
          {"R2", s.base.r2()},
          {"d", r.d},
          {"N", r.N},
          {"D", r.D},
          {"D_alt", r.D_alt},
          {"Q", r.Q},
          {"sigma1_concentric", r.sigma1_concentric},
          {"newton_residual", r.newton_residual},
          {"quad_err", r.quad_err}};
}

std::string json_number(double x) { return std::isfinite(x) ? format_number(x) : "null"; }

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

void emit_records(std::ostream& out, const SweepResult& sweep, RecordFormat format,
                  bool with_checks) {
  std::vector<const SweepEntry*> rows;
  for (const auto& e : sweep.entries)
    if (e.record) rows.push_back(&e);
  if (rows.empty()) throw DomainError("no successful records to emit");

  const ModelSpace& space = sweep.base.space();
  const std::string name(space.name());
  if (format == RecordFormat::Csv) {
    out << kRecordHeader << (with_checks ? ",flags" : "") << '\n';
    for (const SweepEntry* e : rows) {
      out << name << ',' << space.m() << ',' << space.k();
      for (const auto& [key, value] : numeric_fields(sweep, *e->record))
        out << ',' << format_number(value);
      if (with_checks) out << ',' << row_flags(*e);
      out << '\n';
    }
    return;
  }

  out << "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SweepEntry* e = rows[i];
    out << "  {\"space\": \"" << name << "\", \"m\": " << space.m() << ", \"k\": " << space.k();
    for (const auto& [key, value] : numeric_fields(sweep, *e->record))
      out << ", \"" << key << "\": " << json_number(value);
    if (with_checks) out << ", \"flags\": \"" << row_flags(*e) << '"';
    out << '}' << (i + 1 < rows.size() ? "," : "") << '\n';
  }
  out << "]\n";
}

std::string render_records(const SweepResult& sweep, RecordFormat format, bool with_checks) {
  std::ostringstream os;
  emit_records(os, sweep, format, with_checks);
  return os.str();
}

void write_records(const std::filesystem::path& path, const SweepResult& sweep,
                   RecordFormat format, bool with_checks) {
  const std::string text = render_records(sweep, format, with_checks);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path.string() + " for writing");
  file << text;
  file.flush();
  if (!file) throw IoError("failed writing " + path.string());
}

}  // namespace steklov
