#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cayley::verify {

/// Master seed used by every suite unless overridden.
inline constexpr uint64_t kDefaultSeed = 1729;

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  uint64_t counting_checked = 0;     // finite directed diameters inspected
  uint64_t counting_violations = 0;  // below the q^(1/k) - k floor

  bool passed() const;
};

// Suites:
//   oracle          fast diameter/coverage paths vs exhaustive references
//   events          exact solution counts for single and joint hit events
//   coprime         coprime pair density and independent-family sizes
//   coverage-links  coverage/diameter implications on seeded trials
//   ub              empirical tail vs the explicit upper bound
//   lb              empirical tail vs the second-moment lower bound, and the
//                   relation-forces-large-diameter implication
SuiteResult oracle_suite(uint64_t seed);
SuiteResult events_suite();
SuiteResult coprime_suite();
SuiteResult coverage_links_suite(uint64_t seed);
SuiteResult upper_bound_suite(uint64_t seed, unsigned threads);
SuiteResult lower_bound_suite(uint64_t seed, unsigned threads);

const std::vector<std::string>& suite_names();

/// Dispatch by name; throws Error for an unknown suite.
SuiteResult run_suite(std::string_view name, uint64_t seed, unsigned threads);

}  // namespace cayley::verify
