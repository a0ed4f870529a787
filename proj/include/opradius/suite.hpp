#ifndef OPRADIUS_SUITE_HPP
#define OPRADIUS_SUITE_HPP

#include "opradius/catalog.hpp"
#include "opradius/serialization.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace opradius {

// Randomized verification run over a selection of catalog entries. Every
// trial draws fresh seeded inputs honoring the entry's applicability and
// sweeps the declared parameter grid.
struct SuiteConfig {
  std::uint64_t seed = 0;
  std::vector<int> dims = {2, 3};
  int trials = 100;
  std::vector<std::string> entries;  // empty selection = no checks
  double tolerance = 1e-7;
  int restarts = 12;
  std::vector<double> p_grid = {1.0, 1.5, 2.0, 3.0};
  std::vector<double> r_grid = {1.0, 2.0};
  std::vector<double> alpha_grid = {0.0, 0.3, 0.5, 1.0};
  std::vector<double> beta_grid = {0.3, 0.5, 0.7};
  int threads = 0;  // 0 = OPRADIUS_THREADS env, else hardware concurrency
};

struct SuiteEntryStats {
  std::string id;
  int trials = 0;
  long long holds = 0;
  long long inconclusive = 0;
  long long violations = 0;
  double worst_slack = 0.0;  // smallest rhs - lhs seen across all pairs
  std::string worst_case_digest;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::vector<SuiteEntryStats> entries;

  long long total_checks() const;
  long long total_inconclusive() const;
  long long total_violations() const;
};

std::vector<std::string> all_entry_ids();

// Fully reproducible from config.seed; internal parallelism does not affect
// the result. Throws InvalidConfigError on a bad configuration.
SuiteReport run_suite(const SuiteConfig& config);

Json suite_report_to_json(const SuiteReport& report);
std::string suite_report_to_csv(const SuiteReport& report);

}  // namespace opradius

#endif
