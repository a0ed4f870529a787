#include "opradius/suite.hpp"

#include <doctest.h>

#include <cmath>

using namespace opradius;

TEST_CASE("run_suite: empty selection yields an empty report") {
  SuiteConfig config;
  config.seed = 1;
  config.trials = 10;
  const SuiteReport report = run_suite(config);
  CHECK(report.total_checks() == 0);
  CHECK(report.total_violations() == 0);
  CHECK(report.entries.empty());
}

TEST_CASE("run_suite: rejects bad configurations") {
  SuiteConfig config;
  config.entries = {"C1"};
  config.trials = 0;
  CHECK_THROWS_AS(run_suite(config), InvalidConfigError);

  config.trials = 1;
  config.dims = {9};
  CHECK_THROWS_AS(run_suite(config), InvalidConfigError);

  config.dims = {2};
  config.entries = {"C99"};
  CHECK_THROWS_AS(run_suite(config), InvalidConfigError);

  config.entries = {"C1"};
  config.tolerance = 0.0;
  CHECK_THROWS_AS(run_suite(config), InvalidConfigError);
}

TEST_CASE("run_suite: deterministic and thread-count independent") {
  SuiteConfig config;
  config.seed = 42;
  config.dims = {2, 3};
  config.trials = 4;
  config.entries = {"C1", "C6", "C8", "LC1", "P2"};
  config.threads = 1;
  const SuiteReport a = run_suite(config);
  config.threads = 2;
  const SuiteReport b = run_suite(config);
  config.threads = 1;
  const SuiteReport c = run_suite(config);
  CHECK(suite_report_to_json(a).dump() == suite_report_to_json(b).dump());
  CHECK(suite_report_to_json(a).dump() == suite_report_to_json(c).dump());
}

TEST_CASE("run_suite: small all-entry sweep has no violations") {
  SuiteConfig config;
  config.seed = 7;
  config.dims = {2, 3};
  config.trials = 2;
  config.entries = all_entry_ids();
  const SuiteReport report = run_suite(config);
  REQUIRE(report.entries.size() == 39);
  CHECK(report.total_violations() == 0);
  CHECK(report.total_checks() > 0);
  for (const auto& e : report.entries) {
    CAPTURE(e.id);
    CHECK(e.trials == 2);
    CHECK(e.holds + e.inconclusive + e.violations >= 0);
  }
}

TEST_CASE("run_suite: report JSON and CSV shapes") {
  SuiteConfig config;
  config.seed = 3;
  config.dims = {2};
  config.trials = 2;
  config.entries = {"C1", "LC1"};
  const SuiteReport report = run_suite(config);
  const Json j = suite_report_to_json(report);
  CHECK(j["seed"].get<std::uint64_t>() == 3);
  REQUIRE(j["entries"].size() == 2);
  for (const auto& e : j["entries"]) {
    CHECK(e.contains("id"));
    CHECK(e.contains("trials"));
    CHECK(e.contains("holds"));
    CHECK(e.contains("inconclusive"));
    CHECK(e.contains("violations"));
    CHECK(e.contains("worst_slack"));
    CHECK(e.contains("worst_case_digest"));
  }

  const std::string csv = suite_report_to_csv(report);
  CHECK(csv.rfind("id,trials,holds,inconclusive,violations,worst_slack\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}
