// Copyright 2026 The qcorr developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "qcorr/scenarios.hpp"

using namespace qcorr;

TEST_CASE("builtin catalog", "[scenarios]") {
  const auto scenarios = builtin_scenarios();
  REQUIRE(scenarios.size() == 9);

  const std::vector<std::string> names = {
      "ghz_case1",        "ghz_case2",        "w_case1",
      "w_case2",          "ghz_bipartite",    "reduced_ghz_comp",
      "reduced_ghz_bell", "w_bipartite",      "reduced_w_bell_mix"};
  for (std::size_t i = 0; i < names.size(); ++i)
    REQUIRE(scenarios[i].name == names[i]);

  REQUIRE(find_scenario("w_case2").has_value());
  REQUIRE_FALSE(find_scenario("nope").has_value());
}

TEST_CASE("every builtin scenario reproduces its golden tables", "[scenarios]") {
  for (const Scenario& s : builtin_scenarios()) {
    const RunReport report = run(s);
    INFO("scenario " << s.name << " max deviation " << report.max_deviation());
    REQUIRE(report.passed);
    REQUIRE(report.max_deviation() <= kGoldenTol);
    REQUIRE(report.deviations.size() == 6);
  }
}

TEST_CASE("run fills in every pipeline stage", "[scenarios]") {
  const RunReport report = run(*find_scenario("ghz_case1"));

  REQUIRE(report.joint.size() == 8);
  REQUIRE(report.marginals.size() == 3);
  REQUIRE(report.product.size() == 8);
  REQUIRE(report.sum.size() == 8);
  REQUIRE(report.phi_t.size() == 8);

  SECTION("spot values match the published pattern") {
    REQUIRE(report.joint.value(0) == Catch::Approx(0.5).margin(1e-12));
    REQUIRE(report.phi_q.value(0) == Catch::Approx(4.0).margin(1e-12));
    REQUIRE(report.phi_q.value(3) == Catch::Approx(0.0).margin(1e-12));
    for (std::size_t k = 0; k < 8; ++k)
      REQUIRE(report.phi_c.value(k) == Catch::Approx(1.0).margin(1e-12));
  }
}

TEST_CASE("one density matrix, two separations", "[scenarios]") {
  const RunReport comp = run(*find_scenario("reduced_ghz_comp"));
  const RunReport bell = run(*find_scenario("reduced_ghz_bell"));

  SECTION("joint and product tables coincide") {
    for (std::size_t k = 0; k < comp.joint.size(); ++k) {
      REQUIRE(comp.joint.value(k) ==
              Catch::Approx(bell.joint.value(k)).margin(1e-15));
      REQUIRE(comp.product.value(k) ==
              Catch::Approx(bell.product.value(k)).margin(1e-15));
    }
  }
  SECTION("sum tables differ, so the separation differs") {
    double max_diff = 0.0;
    for (std::size_t k = 0; k < comp.sum.size(); ++k)
      max_diff = std::max(max_diff,
                          std::abs(comp.sum.value(k) - bell.sum.value(k)));
    REQUIRE(max_diff > 0.2);
  }
  SECTION("only the Bell content shows quantum correlation") {
    REQUIRE_FALSE(is_quantum_correlated(comp.phi_q));
    REQUIRE(is_quantum_correlated(bell.phi_q));
  }
  SECTION("the bipartite GHZ measurement produces the same joint table") {
    const RunReport full = run(*find_scenario("ghz_bipartite"));
    for (std::size_t k = 0; k < comp.joint.size(); ++k)
      REQUIRE(full.joint.value(k) ==
              Catch::Approx(comp.joint.value(k)).margin(1e-12));
  }
}

TEST_CASE("pure-state scenarios have trivial classical correlation",
          "[scenarios]") {
  for (const char* name : {"ghz_case1", "ghz_case2", "w_case1", "w_case2",
                           "ghz_bipartite", "w_bipartite"}) {
    const RunReport report = run(*find_scenario(name));
    INFO("scenario " << name);
    for (std::size_t k = 0; k < report.phi_c.size(); ++k)
      if (report.phi_c.defined(k))
        REQUIRE(report.phi_c.value(k) == Catch::Approx(1.0).margin(1e-12));
  }
}

TEST_CASE("golden mismatches are reported, not silently absorbed",
          "[scenarios]") {
  Scenario s = *find_scenario("ghz_case1");

  SECTION("a wrong value fails the run") {
    (*s.expected.joint)[0] = Rational(1, 4);
    const RunReport report = run(s);
    REQUIRE_FALSE(report.passed);
    REQUIRE(report.deviations.at("joint") ==
            Catch::Approx(0.25).margin(1e-12));
  }
  SECTION("a wrong definedness pattern counts as infinite deviation") {
    (*s.expected.phi_q)[1] = std::nullopt;
    const RunReport report = run(s);
    REQUIRE_FALSE(report.passed);
    REQUIRE(std::isinf(report.deviations.at("phi_q")));
  }
  SECTION("a wrong-length golden table is a hard error") {
    s.expected.joint->push_back(Rational(0));
    REQUIRE_THROWS_AS(run(s), std::invalid_argument);
  }
  SECTION("absent golden blocks mean nothing to diff") {
    s.expected = GoldenTables{};
    REQUIRE(s.expected.empty());
    const RunReport report = run(s);
    REQUIRE(report.passed);
    REQUIRE(report.deviations.empty());
  }
}

TEST_CASE("golden parsers accept rationals and undef markers", "[scenarios]") {
  const auto probs = golden_probs({"1/2", "0", "5/24"});
  REQUIRE(probs[0] == Rational(1, 2));
  REQUIRE(probs[1] == Rational(0));
  REQUIRE(probs[2] == Rational(5, 24));

  const auto phis = golden_phis({"9/4", "undef", "0"});
  REQUIRE(phis[0] == Rational(9, 4));
  REQUIRE_FALSE(phis[1].has_value());
  REQUIRE(phis[2] == Rational(0));

  REQUIRE_THROWS_AS(golden_probs({"1/2", "half"}), std::invalid_argument);
}
