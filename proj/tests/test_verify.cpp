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

#include <string>

#include "steklov/verify.hpp"

using namespace steklov;

TEST_CASE("check names and order") {
  const auto names = verification_check_names();
  REQUIRE(names.size() == 15);
  CHECK(names.front() == "closed_form_sigma1");
  CHECK(names.back() == "mps_self_convergence");
}

TEST_CASE("fast verification passes and is deterministic") {
  VerifyOptions opts;
  opts.fast = true;
  const auto first = run_verification(opts);
  CHECK(first.all_passed());
  const auto names = verification_check_names();
  REQUIRE(first.checks.size() == names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    INFO(first.checks[i].name << ": " << first.checks[i].detail);
    CHECK(first.checks[i].name == names[i]);
    CHECK(first.checks[i].passed);
    CHECK(first.checks[i].detail.find(',') == std::string::npos);
    CHECK(first.checks[i].detail.find('\n') == std::string::npos);
  }
  opts.threads = 3;
  CHECK(run_verification(opts).render() == first.render());
}

TEST_CASE("report rendering") {
  VerifyReport report;
  report.checks.push_back({"alpha", true, "ok"});
  report.checks.push_back({"beta", false, "gap 1e-3"});
  CHECK_FALSE(report.all_passed());
  CHECK(report.render() == "check,status,detail\nalpha,pass,ok\nbeta,fail,gap 1e-3\n");
  report.checks.pop_back();
  CHECK(report.all_passed());
}
