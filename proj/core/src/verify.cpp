#include "cayley/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "cayley/coverage.hpp"
#include "cayley/distance.hpp"
#include "cayley/errors.hpp"
#include "cayley/harness.hpp"
#include "cayley/oracle.hpp"
#include "cayley/primality.hpp"
#include "cayley/sampling.hpp"
#include "cayley/sweep_io.hpp"

namespace cayley::verify {

bool SuiteResult::passed() const {
  for (const CheckResult& check : checks) {
    if (!check.passed) return false;
  }
  return counting_violations == 0;
}

namespace {

std::vector<uint32_t> primes_in(uint32_t lo, uint32_t hi) {
  std::vector<uint32_t> primes;
  for (uint32_t n = lo; n <= hi; ++n) {
    if (is_prime(n)) primes.push_back(n);
  }
  return primes;
}

void tally_counting(SuiteResult& result, uint32_t q, uint32_t k, StepMode mode,
                    const std::optional<uint32_t>& diameter) {
  if (mode != StepMode::Directed || !diameter.has_value()) return;
  result.counting_checked += 1;
  if (!counting_bound_ok(q, k, *diameter)) result.counting_violations += 1;
}

bool profiles_equal(const DistanceProfile& a, const DistanceProfile& b) {
  return a.q == b.q && a.distances == b.distances &&
         a.eccentricity == b.eccentricity && a.reachable_count == b.reachable_count &&
         a.ball_sizes == b.ball_sizes;
}

uint64_t ipow(uint64_t base, uint32_t exp) {
  uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

class CheckTimer {
 public:
  CheckTimer() : start_(std::chrono::steady_clock::now()) {}
  std::string note() const {
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    char buf[32];
    std::snprintf(buf, sizeof(buf), " in %.1fs", s);
    return buf;
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

SuiteResult oracle_suite(uint64_t seed) {
  SuiteResult result;
  result.suite = "oracle";

  // Diameter: the production BFS must reproduce the naive adjacency-list BFS
  // exactly, every distance included.
  {
    CheckResult check;
    check.name = "diameter-oracle-equivalence";
    const CheckTimer timer;
    uint64_t instances = 0;
    uint64_t mismatches = 0;
    std::string first_bad;
    for (uint32_t q : primes_in(5, 1999)) {
      const GroupSpec group = GroupSpec::make(q);
      for (uint32_t k = 1; k <= 3; ++k) {
        for (StepMode mode : {StepMode::Directed, StepMode::Symmetric}) {
          for (uint64_t t = 0; t < 20; ++t) {
            const GeneratorSet gens =
                sample_generators(group, k, mode, RandomSource{seed, t});
            const DistanceProfile fast = distance_profile(group, gens);
            const DistanceProfile ref = oracle::oracle_diameter(group, gens);
            ++instances;
            if (!profiles_equal(fast, ref)) {
              ++mismatches;
              if (first_bad.empty()) {
                first_bad = " first mismatch at q=" + std::to_string(q) +
                            " k=" + std::to_string(k) + " mode=" +
                            std::string(to_string(mode)) + " t=" + std::to_string(t);
              }
            }
            tally_counting(result, q, k, mode, fast.diameter());
          }
        }
      }
    }
    check.passed = mismatches == 0;
    check.detail = std::to_string(instances) + " instances, " +
                   std::to_string(mismatches) + " mismatches" + first_bad + timer.note();
    result.checks.push_back(check);
  }

  // Coverage: shifted-bitmap unions vs explicit enumeration of the exponent
  // box, plus the hit-count total (L+1)^k and the support consistency.
  {
    CheckResult check;
    check.name = "coverage-oracle-equivalence";
    const CheckTimer timer;
    uint64_t instances = 0;
    uint64_t mismatches = 0;
    std::string first_bad;
    for (uint32_t q : primes_in(2, 200)) {
      const GroupSpec group = GroupSpec::make(q);
      for (uint32_t k = 1; k <= 3; ++k) {
        for (StepMode mode : {StepMode::Directed, StepMode::Symmetric}) {
          for (uint64_t t = 0; t < 10; ++t) {
            const GeneratorSet gens =
                sample_generators(group, k, mode, RandomSource{seed, t});
            for (uint32_t bound = 0; bound <= 12; ++bound) {
              const CoverageReport fast = coverage_report(group, gens, bound);
              const CoverageReport ref = oracle::oracle_coverage(group, gens, bound);
              ++instances;
              bool ok = fast.covered == ref.covered &&
                        fast.covered_count == ref.covered_count &&
                        fast.full == ref.full;
              if (ok && mode == StepMode::Directed) {
                const HitCountTable hits = hit_counts(group, gens, bound);
                uint64_t total = 0;
                for (uint32_t x = 0; x < q; ++x) {
                  total += hits.counts[x];
                  if ((hits.counts[x] > 0) != fast.covered.test(x)) ok = false;
                }
                if (total != ipow(bound + 1, k)) ok = false;
              }
              if (!ok) {
                ++mismatches;
                if (first_bad.empty()) {
                  first_bad = " first mismatch at q=" + std::to_string(q) +
                              " k=" + std::to_string(k) + " L=" + std::to_string(bound) +
                              " mode=" + std::string(to_string(mode)) +
                              " t=" + std::to_string(t);
                }
              }
            }
          }
        }
      }
    }
    check.passed = mismatches == 0;
    check.detail = std::to_string(instances) + " instances, " +
                   std::to_string(mismatches) + " mismatches" + first_bad + timer.note();
    result.checks.push_back(check);
  }

  return result;
}

SuiteResult events_suite() {
  SuiteResult result;
  result.suite = "events";

  CheckResult check;
  check.name = "exact-event-counts";
  uint64_t pairs_tested = 0;
  uint64_t failures = 0;
  std::string first_bad;

  const auto record_failure = [&](uint32_t q, uint32_t k, uint32_t x, const char* what) {
    ++failures;
    if (first_bad.empty()) {
      first_bad = std::string(" first failure: ") + what + " at q=" + std::to_string(q) +
                  " k=" + std::to_string(k) + " x=" + std::to_string(x);
    }
  };

  constexpr uint32_t kPoolSize = 12;
  for (uint32_t q : {5u, 7u, 11u, 13u}) {
    for (uint32_t k : {2u, 3u}) {
      for (uint32_t x : {1u, 2u}) {
        for (uint32_t idx = 0; idx < kPoolSize; ++idx) {
          // leading coordinate 1 keeps every base vector nonzero mod q
          std::vector<uint32_t> v(k, 0);
          v[0] = 1;
          v[1] = idx % q;
          if (k == 3) v[2] = (idx * idx + 1) % q;

          // equal: the pair (v, v)
          {
            const auto stats = oracle::event_statistics(q, k, v, v, x);
            ++pairs_tested;
            if (stats.classification != oracle::PairClass::Equal ||
                stats.count_i != ipow(q, k - 1) || stats.count_joint != stats.count_i) {
              record_failure(q, k, x, "equal pair");
            }
          }

          // dependent: (v, lambda v) with lambda in [2, q-1]
          {
            const uint32_t lambda = 2 + idx % (q - 2);
            std::vector<uint32_t> w(k);
            for (uint32_t c = 0; c < k; ++c) {
              w[c] = static_cast<uint32_t>(uint64_t{lambda} * v[c] % q);
            }
            const auto stats = oracle::event_statistics(q, k, v, w, x);
            ++pairs_tested;
            if (stats.classification != oracle::PairClass::Dependent ||
                stats.count_i != ipow(q, k - 1) || stats.count_joint != 0) {
              record_failure(q, k, x, "dependent pair");
            }
          }

          // independent: rows (1, a, ...) and (0, 1, ...) have an invertible
          // leading 2x2 minor for any padding
          {
            std::vector<uint32_t> w(k, 0);
            w[0] = 0;
            w[1] = 1;
            if (k == 3) w[2] = (idx + 2) % q;
            const auto stats = oracle::event_statistics(q, k, v, w, x);
            ++pairs_tested;
            if (stats.classification != oracle::PairClass::Independent ||
                stats.count_i != ipow(q, k - 1) || stats.count_joint != ipow(q, k - 2)) {
              record_failure(q, k, x, "independent pair");
            }
          }
        }
      }
    }
  }

  check.passed = failures == 0;
  check.detail = std::to_string(pairs_tested) + " pairs, " + std::to_string(failures) +
                 " failures" + first_bad;
  result.checks.push_back(check);
  return result;
}

SuiteResult coprime_suite() {
  SuiteResult result;
  result.suite = "coprime";

  const std::vector<uint64_t> counts = coprime_pair_counts(1000);

  {
    CheckResult check;
    check.name = "coprime-density-floor";
    uint64_t violations = 0;
    std::string detail;
    for (uint32_t limit = 1; limit <= 1000; ++limit) {
      // exact integer comparison of count/limit^2 > 0.60792
      const uint64_t lhs = counts[limit - 1] * 100000;
      const uint64_t rhs = uint64_t{60792} * limit * limit;
      if (lhs <= rhs) {
        ++violations;
        if (detail.empty()) {
          const double fraction = static_cast<double>(counts[limit - 1]) /
                                  (static_cast<double>(limit) * limit);
          detail = " counterexample L=" + std::to_string(limit) + ": " +
                   std::to_string(counts[limit - 1]) + "/" + std::to_string(limit) +
                   "^2 = " + format_double17(fraction);
        }
      }
    }
    check.passed = violations == 0;
    check.detail = "fraction > 0.60792 for L in 1..1000: " + std::to_string(violations) +
                   " violations" + detail;
    result.checks.push_back(check);
  }

  {
    CheckResult check;
    check.name = "coprime-density-limit";
    const double fraction = static_cast<double>(counts[999]) / 1e6;
    const double limit = 6.0 / (std::numbers::pi * std::numbers::pi);
    const double diff = std::abs(fraction - limit);
    check.passed = diff < 0.01;
    check.detail = "coprime_fraction(1000) = " + std::to_string(fraction) +
                   ", |. - 6/pi^2| = " + std::to_string(diff);
    result.checks.push_back(check);
  }

  {
    CheckResult check;
    check.name = "independent-family-floor";
    uint64_t violations = 0;
    std::string detail;
    for (uint32_t k : {2u, 3u, 4u}) {
      for (uint32_t limit = 1; limit <= 100; ++limit) {
        const uint64_t family = independent_family_count(limit, k);
        const uint64_t box = ipow(limit, k);  // need family >= box / 2
        if (2 * family < box) {
          ++violations;
          if (detail.empty()) {
            detail = " first violation at L=" + std::to_string(limit) +
                     " k=" + std::to_string(k);
          }
        }
      }
    }
    check.passed = violations == 0;
    check.detail = "family >= L^k/2 for L <= 100, k in {2,3,4}: " +
                   std::to_string(violations) + " violations" + detail;
    result.checks.push_back(check);
  }

  return result;
}

SuiteResult coverage_links_suite(uint64_t seed) {
  SuiteResult result;
  result.suite = "coverage-links";

  const GroupSpec group = GroupSpec::make(10007);
  const uint32_t q = group.q;
  const uint32_t k = 2;
  const double root = kth_root(q, k);
  const std::vector<uint32_t> base_probes = {
      static_cast<uint32_t>(std::floor(0.5 * root)),
      static_cast<uint32_t>(std::floor(root)),
      static_cast<uint32_t>(std::floor(2.0 * root)),
  };

  CheckResult check;
  check.name = "coverage-diameter-links";
  uint64_t violations = 0;
  uint64_t checks_run = 0;
  std::string first_bad;
  const auto violation = [&](uint64_t t, uint32_t bound, const char* what) {
    ++violations;
    if (first_bad.empty()) {
      first_bad = std::string(" first violation: ") + what + " at t=" + std::to_string(t) +
                  " L=" + std::to_string(bound);
    }
  };

  for (uint64_t t = 0; t < 50; ++t) {
    const GeneratorSet gens =
        sample_generators(group, k, StepMode::Directed, RandomSource{seed, t});
    const DistanceProfile profile = distance_profile(group, gens);
    const std::optional<uint32_t> diameter = profile.diameter();
    tally_counting(result, q, k, StepMode::Directed, diameter);

    std::vector<uint32_t> probes = base_probes;
    if (diameter.has_value()) probes.push_back(*diameter);

    for (uint32_t bound : probes) {
      const CoverageReport cov = coverage_report(group, gens, bound);
      ++checks_run;
      if (cov.full) {
        // full coverage at L forces diameter <= k L
        if (!diameter.has_value() || *diameter > uint64_t{k} * bound) {
          violation(t, bound, "full(L) but diameter > kL");
        }
      } else {
        // missing coverage at L forces diameter >= L + 1
        if (diameter.has_value() && *diameter < bound + 1) {
          violation(t, bound, "not full(L) but diameter <= L");
        }
      }
      if (cov.covered_count > q / 2) {
        const CoverageReport doubled = coverage_report(group, gens, 2 * bound);
        ++checks_run;
        if (!doubled.full) violation(t, bound, "count > q/2 but not full(2L)");
      }
      if (diameter.has_value() && bound == *diameter && !cov.full) {
        violation(t, bound, "not full at the diameter");
      }
    }
  }

  check.passed = violations == 0;
  check.detail = std::to_string(checks_run) + " implications over 50 trials, " +
                 std::to_string(violations) + " violations" + first_bad;
  result.checks.push_back(check);
  return result;
}

namespace {

SweepConfig tail_cell_config(uint64_t seed, unsigned threads, uint32_t trials,
                                std::vector<double> c_grid, std::vector<double> probes) {
  SweepConfig config;
  config.q_list = {99991};
  config.k_list = {2};
  config.modes = {StepMode::Directed};
  config.trials = trials;
  config.c_grid = std::move(c_grid);
  config.l_probes = std::move(probes);
  config.master_seed = seed;
  config.threads = threads;
  return config;
}

const TailEstimate& tail_at(const std::vector<TailEstimate>& tails, double c) {
  for (const TailEstimate& t : tails) {
    if (t.c == c) return t;
  }
  throw Error("tail grid is missing C=" + format_double17(c));
}

}  // namespace

SuiteResult upper_bound_suite(uint64_t seed, unsigned threads) {
  SuiteResult result;
  result.suite = "ub";

  const SweepConfig config = tail_cell_config(
      seed, threads, 500, {1, 1.5, 2, 3, 4, 8, 16, 20, 24}, {});
  const std::vector<TrialRecord> records = run_trials(config);
  for (const TrialRecord& rec : records) {
    tally_counting(result, rec.q, rec.k, rec.mode, rec.ok() ? rec.diameter : std::nullopt);
  }
  const std::vector<TailEstimate> tails = tail_estimates(records, config.c_grid);

  {
    CheckResult check;
    check.name = "tail-upper-bound";
    bool pass = true;
    std::ostringstream detail;
    for (double c : {16.0, 20.0, 24.0}) {
      const TailEstimate& t = tail_at(tails, c);
      const bool ok = t.wilson_lo <= t.upper_bound;
      pass = pass && ok;
      detail << "C=" << c << ": exceed " << t.exceed_count << "/" << t.n
             << ", wilson_lo " << format_double17(t.wilson_lo) << " <= bound "
             << format_double17(t.upper_bound) << (ok ? " ok; " : " VIOLATED; ");
    }
    check.passed = pass;
    check.detail = detail.str();
    result.checks.push_back(check);
  }

  {
    CheckResult check;
    check.name = "tail-monotone";
    bool pass = true;
    for (size_t i = 0; i + 1 < tails.size(); ++i) {
      if (tails[i + 1].exceed_count > tails[i].exceed_count) pass = false;
    }
    std::ostringstream detail;
    detail << "exceed counts over C grid:";
    for (const TailEstimate& t : tails) detail << ' ' << t.exceed_count;
    check.passed = pass;
    check.detail = detail.str();
    result.checks.push_back(check);
  }

  return result;
}

SuiteResult lower_bound_suite(uint64_t seed, unsigned threads) {
  SuiteResult result;
  result.suite = "lb";

  const SweepConfig config =
      tail_cell_config(seed, threads, 2000, {2, 3, 4}, {0.1, 0.125});
  const std::vector<TrialRecord> records = run_trials(config);
  for (const TrialRecord& rec : records) {
    tally_counting(result, rec.q, rec.k, rec.mode, rec.ok() ? rec.diameter : std::nullopt);
  }
  const std::vector<TailEstimate> tails = tail_estimates(records, config.c_grid);

  {
    CheckResult check;
    check.name = "tail-lower-bound";
    bool pass = true;
    std::ostringstream detail;
    for (double c : {2.0, 3.0}) {
      const TailEstimate& t = tail_at(tails, c);
      const bool ok = t.wilson_hi >= t.lower_bound;
      pass = pass && ok;
      detail << "C=" << c << ": exceed " << t.exceed_count << "/" << t.n
             << ", wilson_hi " << format_double17(t.wilson_hi) << " >= D^k/3 "
             << format_double17(t.lower_bound) << (ok ? " ok; " : " VIOLATED; ");
    }
    check.passed = pass;
    check.detail = detail.str();
    result.checks.push_back(check);
  }

  {
    CheckResult check;
    check.name = "scaled-iqr-positive";
    const DistributionSummary summary = scaled_distribution(records);
    check.passed = summary.iqr() > 0.0;
    check.detail = "iqr = " + format_double17(summary.iqr()) + ", median = " +
                   format_double17(summary.median());
    result.checks.push_back(check);
  }

  {
    CheckResult check;
    check.name = "relation-implies-large-diameter";
    const double root = kth_root(99991, 2);
    uint64_t fired = 0;
    uint64_t violations = 0;
    std::ostringstream detail;
    const std::pair<double, double> pairs[] = {{4.0, 0.1}, {2.0, 0.125}};
    for (const auto& [c, d] : pairs) {
      // the implication needs k D C^(k-1) < 1; both pairs qualify (0.8 and 0.5)
      const uint32_t bound = static_cast<uint32_t>(std::floor(d * root));
      uint64_t fired_here = 0;
      uint64_t violations_here = 0;
      for (const TrialRecord& rec : records) {
        if (!rec.ok()) continue;
        for (const ProbeResult& probe : rec.probes) {
          if (probe.bound != bound || !probe.relation_fired) continue;
          ++fired_here;
          const bool exceeds = !rec.diameter.has_value() ||
                               static_cast<double>(*rec.diameter) > c * root;
          if (!exceeds) ++violations_here;
        }
      }
      fired += fired_here;
      violations += violations_here;
      detail << "(C=" << c << ", D=" << d << ", L=" << bound << "): fired "
             << fired_here << ", violations " << violations_here << "; ";
    }
    check.passed = violations == 0 && fired > 0;
    check.detail = detail.str();
    result.checks.push_back(check);
  }

  return result;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"oracle",         "events", "coprime",
                                                 "coverage-links", "ub",     "lb"};
  return names;
}

SuiteResult run_suite(std::string_view name, uint64_t seed, unsigned threads) {
  if (name == "oracle") return oracle_suite(seed);
  if (name == "events") return events_suite();
  if (name == "coprime") return coprime_suite();
  if (name == "coverage-links") return coverage_links_suite(seed);
  if (name == "ub") return upper_bound_suite(seed, threads);
  if (name == "lb") return lower_bound_suite(seed, threads);
  throw Error("unknown verify suite: " + std::string(name));
}

}  // namespace cayley::verify
