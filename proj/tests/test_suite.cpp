#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fusionforge/errors.hpp"
#include "fusionforge/suite.hpp"

#include <algorithm>

using namespace fusionforge;

TEST_CASE("criterion names are fixed and canonical") {
  auto names = criterion_names();
  CHECK(names.size() == 8);
  CHECK(names.front() == "goursat-roundtrip");
  CHECK(names.back() == "determinism");
  CHECK(std::find(names.begin(), names.end(), "saturation") != names.end());
}

TEST_CASE("unknown criterion is rejected") {
  SuiteOptions opt;
  CHECK_THROWS_AS(run_criterion("no-such-criterion", opt), InvalidData);
}

TEST_CASE("fast criteria pass") {
  SuiteOptions opt;
  for (auto const *name :
       {"determinism", "saturation", "quotient-chain", "mackey-deflation"}) {
    CriterionResult r = run_criterion(name, opt);
    CAPTURE(name);
    CHECK(r.passed);
    CHECK(r.name == name);
  }
}

TEST_CASE("suite subset keeps canonical order and reports") {
  SuiteOptions opt;
  auto results = run_suite(opt, {"saturation", "quotient-chain"});
  REQUIRE(results.size() == 2);
  // quotient-chain precedes saturation in the canonical order, regardless of
  // the order the caller listed them in
  CHECK(results[0].name == "quotient-chain");
  CHECK(results[1].name == "saturation");

  nlohmann::json report = suite_report(results);
  CHECK(report.at("passed").get<bool>());
  CHECK(report.at("failures").empty());
  CHECK(report.at("criteria").size() == 2);
}

TEST_CASE("capped tensor sweep still passes on a tiny roster") {
  SuiteOptions opt;
  opt.max_order = 4; // C2, C4, C2 x C2 only
  opt.pair_cap = 50;
  CriterionResult r = run_criterion("tensor-decomposition", opt);
  CHECK(r.passed);
  CHECK(r.detail.at("exhaustive").get<bool>() == false);
  CHECK(r.detail.at("triples").get<unsigned>() == 27);
}
