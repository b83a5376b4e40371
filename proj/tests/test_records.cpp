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

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "steklov/error.hpp"
#include "steklov/records.hpp"

using namespace steklov;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
  return out;
}

SweepResult small_sweep(std::vector<double> d) {
  const auto base = ShellGeometry::make(ModelSpace::make(Family::Sphere, 2), 0.3, 1.2, 0.0);
  return sweep(base, d);
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-2.0) == "-2");
  CHECK(format_number(1e-20) == "9.9999999999999995e-21");
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");
  for (double x : {std::acos(-1.0), 1.0 / 3.0, 6.02214076e23, -1.2345678901234567e-300})
    CHECK(std::stod(format_number(x)) == x);
}

TEST_CASE("CSV header and a single row") {
  const auto text = render_records(small_sweep({0.0}), RecordFormat::Csv);
  const auto rows = lines_of(text);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == kRecordHeader);
  const auto cells = split(rows[1]);
  REQUIRE(cells.size() == split(kRecordHeader).size());
  CHECK(cells[0] == "sphere");
  CHECK(cells[1] == "2");
  CHECK(cells[2] == "1");
  CHECK(cells[3] == "0.29999999999999999");
  CHECK(cells[5] == "0");
  CHECK(std::stod(cells[9]) == doctest::Approx(std::stod(cells[10])).epsilon(1e-10));
}

TEST_CASE("CSV and JSON carry the same values") {
  const auto res = small_sweep({0.0, 0.2, 0.5});
  const auto csv = lines_of(render_records(res, RecordFormat::Csv));
  const auto json = nlohmann::json::parse(render_records(res, RecordFormat::Json));
  REQUIRE(json.is_array());
  REQUIRE(json.size() == 3);
  const auto keys = split(csv[0]);
  for (std::size_t row = 0; row < 3; ++row) {
    const auto cells = split(csv[row + 1]);
    for (std::size_t c = 0; c < keys.size(); ++c) {
      const auto& value = json[row].at(keys[c]);
      if (value.is_string()) {
        CHECK(value.get<std::string>() == cells[c]);
      } else {
        CHECK(value.get<double>() == std::stod(cells[c]));
      }
    }
  }
}

TEST_CASE("records follow the input order") {
  const auto grid = default_d_grid(0.3, 1.2);
  std::vector<double> reversed(grid.rbegin(), grid.rend());
  const auto rows = lines_of(render_records(small_sweep(reversed), RecordFormat::Csv));
  REQUIRE(rows.size() == 18);
  for (std::size_t i = 0; i < reversed.size(); ++i) CHECK(std::stod(split(rows[i + 1])[5]) == reversed[i]);
}

TEST_CASE("comparison flags column") {
  const auto rows = lines_of(render_records(small_sweep({0.0, 0.2, 0.5}), RecordFormat::Csv, true));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::string(kRecordHeader) + ",flags");
  CHECK(split(rows[1]).back() == "reference");
  CHECK(split(rows[2]).back() == "D_up N_lt_N0 Q_lt_Q0");
  CHECK(split(rows[3]).back() == "D_up N_lt_N0 Q_lt_Q0");
  const auto json = nlohmann::json::parse(render_records(small_sweep({0.0, 0.2}), RecordFormat::Json, true));
  CHECK(json[1]["flags"] == "D_up N_lt_N0 Q_lt_Q0");
}

TEST_CASE("failed entries are omitted") {
  const auto res = small_sweep({0.0, 0.95});
  REQUIRE_FALSE(res.entries[1].record);
  CHECK(lines_of(render_records(res, RecordFormat::Csv)).size() == 2);
  CHECK_THROWS_AS(render_records(small_sweep({0.95}), RecordFormat::Csv), DomainError);
}

TEST_CASE("file output") {
  const auto dir = std::filesystem::temp_directory_path() / "steklov_records_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.csv";
  const auto res = small_sweep({0.0, 0.3});
  write_records(path, res, RecordFormat::Csv);
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str() == render_records(res, RecordFormat::Csv));
  std::filesystem::remove_all(dir);

  const std::filesystem::path missing = "/nonexistent-dir/steklov/out.csv";
  try {
    write_records(missing, res, RecordFormat::Csv);
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find(missing.string()) != std::string::npos);
  }
}
