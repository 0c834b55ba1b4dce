#include "doctest.h"

#include "pronorm/errors.hpp"
#include "pronorm/scenarios.hpp"

using namespace pronorm;

TEST_CASE("registry lists the expected scenarios") {
  auto names = list_scenarios();
  CHECK(names.size() >= 15);
  auto has = [&](const char* n) {
    return std::find(names.begin(), names.end(), n) != names.end();
  };
  CHECK(has("frobenius_product"));
  CHECK(has("cpwrsn_grid"));
  CHECK(has("counterexample_core"));
  CHECK(has("hall_audit"));
  CHECK(has("awrsn_probe"));
  CHECK(has("nonpron_product_of_pronormal"));
}

TEST_CASE("unknown scenario name is an error") {
  CHECK_THROWS_AS(run_scenario("no_such"), ParseError);
  CHECK_THROWS_AS(run_all("zzz_no_match"), ParseError);
}

TEST_CASE("single scenario runs deterministically") {
  ScenarioResult a = run_scenario("frobenius_product");
  ScenarioResult b = run_scenario("frobenius_product");
  CHECK(a.status == ScenarioResult::Status::pass);
  CHECK(a.details["index"] == b.details["index"]);
  CHECK(a.details["verdict"] == b.details["verdict"]);
}

TEST_CASE("filtered run aggregates without aborting") {
  ScenarioReport rep = run_all("probe");
  CHECK(rep.results.size() == 1);
  CHECK(rep.results[0].name == "awrsn_probe");
  CHECK(rep.all_pass);
  auto j = rep.to_json();
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["results"].size() == 1);
}

TEST_CASE("probe records the matching quantifier variant") {
  ScenarioResult r = run_scenario("awrsn_probe");
  REQUIRE(r.status == ScenarioResult::Status::pass);
  CHECK(r.details["matching_variant"] == "non-strict");
  CHECK(r.details["measured_all_pronormal"] == false);
}
