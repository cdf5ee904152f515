// Copyright 2026 The mmm Authors
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

#include <cstdio>
#include <fstream>
#include <limits>
#include <set>

#include "mmm/discrepancy.hpp"
#include "mmm/io.hpp"
#include "test_support.hpp"

using namespace mmm;
using namespace mmm::testing;

TEST_CASE("format_number") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1e-13) == "0");
  CHECK(format_number(-3e-13) == "0");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(-2.5) == "-2.5");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(2.0 / 9.0) == "0.222222222222");
  CHECK(format_number(9.9999999999995) == "10");
  CHECK(format_number(123456.789) == "123456.789");
  CHECK(format_number(1e-11) == "0.00000000001");
  CHECK(format_number(0.1 + 0.2) == "0.3");
  CHECK_THROWS_AS(format_number(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
  CHECK_THROWS_AS(format_number(std::numeric_limits<double>::infinity()), std::invalid_argument);
  CHECK(round_number(0.1 + 0.2) == 0.3);
}

TEST_CASE("alpha JSON") {
  SUBCASE("round trip") {
    const ComplexMatrix a = qutrit_family({0.7, 1.3}).entries();
    const ComplexMatrix b = alpha_from_json(json::parse(alpha_to_json(a).dump()));
    CHECK(max_abs(a - b) < 1e-11);
    CHECK(validate(b, 1e-10).accepted());
  }
  SUBCASE("literal input") {
    const json j = json::parse(R"({"d": 2, "alpha": [[[0.5, 0], [0, 0.5]], [[0, 0], [0.5, -0.5]]]})");
    const ComplexMatrix m = alpha_from_json(j);
    CHECK(m(0, 0) == Complex(0.5, 0.0));
    CHECK(m(0, 1) == Complex(0.0, 0.5));
    CHECK(m(1, 1) == Complex(0.5, -0.5));
  }
  SUBCASE("malformed input") {
    for (const char* text : {
             R"([1, 2])",
             R"({"alpha": [[[1, 0]]]})",
             R"({"d": 1, "alpha": [[[1, 0]]]})",
             R"({"d": 2.5, "alpha": []})",
             R"({"d": 2})",
             R"({"d": 2, "alpha": [[[1, 0], [0, 0]]]})",
             R"({"d": 2, "alpha": [[[1, 0], [0, 0]], [[0, 0]]]})",
             R"({"d": 2, "alpha": [[[1, 0], [0, 0]], [[0, 0], [0]]]})",
             R"({"d": 2, "alpha": [[[1, 0], [0, 0]], [[0, 0], ["a", 0]]]})",
         }) {
      CAPTURE(text);
      CHECK_THROWS_AS(alpha_from_json(json::parse(text)), ParseError);
    }
  }
}

TEST_CASE("state JSON") {
  const BipartiteState s = build_state(named_example("bell-seed", 2));
  const json j = state_to_json(s);
  CHECK(j["d"] == 2);
  CHECK(j["rho"][0][3][0] == 0.5);
  const BipartiteState back = state_from_json(json::parse(j.dump()));
  CHECK(back.d == 2);
  CHECK(max_abs(back.rho - s.rho) < 1e-12);
  CHECK_THROWS_AS(state_from_json(json::parse(R"({"d": 2, "rho": [[[1, 0]]]})")), ParseError);
}

TEST_CASE("summary JSON") {
  const InvariantSet inv = block_invariants(qutrit_family({0.0, 0.0}));
  const json j = to_json(inv);
  CHECK(j["mode"] == "hs-orthonormal");
  CHECK(j["kappa1"].size() == 3u);
  CHECK(j["kappa2"].size() == 9u);
  CHECK(j["kappa3"].size() == 8u);
  CHECK(j["negativity"] == round_number(2.0 / 9.0));

  const json r = to_json(residuals(ComplexMatrix::Identity(3, 3) / std::sqrt(3.0)));
  CHECK(r["shifts"].size() == 2u);
  CHECK(r["shifts"][1]["l"] == 2);
  CHECK(r["max"] == 0.0);
}

TEST_CASE("read_json_file") {
  const std::string path = "mmm_test_io_tmp.json";
  {
    std::ofstream f(path);
    f << alpha_to_json(named_example("uniform-diagonal", 2).entries()).dump();
  }
  CHECK(alpha_from_json(read_json_file(path)).rows() == 2);
  {
    std::ofstream f(path);
    f << "{ not json";
  }
  CHECK_THROWS_AS(read_json_file(path), ParseError);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_json_file("does/not/exist.json"), ParseError);
}

TEST_CASE("discrepancy report") {
  const auto report = discrepancy_report();
  REQUIRE_FALSE(report.empty());
  std::set<std::string> ids;
  for (const Discrepancy& d : report) {
    ids.insert(d.id);
    CHECK_FALSE(d.stated.empty());
    CHECK_FALSE(d.adopted.empty());
    CHECK_FALSE(d.evidence.empty());
  }
  for (const char* id : {"fourier-prefactor", "negativity-summation", "kappa3-radicand"})
    CHECK(ids.count(id) == 1);
  const json j = to_json(report);
  CHECK(j["discrepancies"].size() == report.size());
  CHECK(j.dump() == to_json(discrepancy_report()).dump());
}
