#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayley/coverage.hpp"
#include "cayley/group.hpp"

namespace cayley {

/// One Monte Carlo sweep: the cross product q_list x k_list x modes, with
/// `trials` independent trials per cell. Trial t always uses stream id t,
/// so any single trial can be replayed in isolation.
struct SweepConfig {
  std::vector<uint32_t> q_list;
  std::vector<uint32_t> k_list;
  std::vector<StepMode> modes;
  uint32_t trials = 1;
  std::vector<double> c_grid;    // tail thresholds C, in units of q^(1/k)
  std::vector<double> l_probes;  // per-trial probes at bound = floor(coeff * q^(1/k))
  uint64_t master_seed = 0;
  uint64_t work_budget = kDefaultShiftBudget;
  unsigned threads = 0;  // hint only; 0 = all hardware threads
};

struct ProbeResult {
  uint32_t bound = 0;            // the exact integer L used
  bool relation_fired = false;   // a nonzero exponent vector in the box hits 0
  uint32_t covered_count = 0;    // B_L
};

struct TrialRecord {
  uint64_t trial_index = 0;
  uint32_t q = 2;
  uint32_t k = 1;
  StepMode mode = StepMode::Directed;
  uint64_t master_seed = 0;
  std::vector<uint32_t> gens;
  std::optional<uint32_t> diameter;  // absent when some vertex is unreachable
  double scaled_diameter = 0.0;      // diameter / q^(1/k); meaningful only if diameter
  std::vector<ProbeResult> probes;
  std::string error;  // nonempty when the trial failed (budget/capacity)

  bool ok() const { return error.empty(); }
};

double kth_root(uint32_t q, uint32_t k);

/// Simple counting bound: at most (d+1)^k sums reach all q residues, so any
/// finite directed diameter d satisfies d >= q^(1/k) - k.
bool counting_bound_ok(uint32_t q, uint32_t k, uint32_t diameter);

/// Runs every trial of the sweep, possibly concurrently. Output is sorted by
/// (q, k, mode, trial_index) and is independent of the thread count. Per-trial
/// errors are captured in the record, never aborting the sweep.
std::vector<TrialRecord> run_trials(const SweepConfig& config);

struct WilsonInterval {
  double lo = 0.0;
  double hi = 1.0;
};

/// Wilson score interval at 95% (z = 1.96); well-defined at 0 and n successes.
WilsonInterval wilson95(uint64_t successes, uint64_t n);

struct TailEstimate {
  double c = 0.0;
  uint64_t exceed_count = 0;  // trials with diameter > c * q^(1/k)
  uint64_t n = 0;             // finite-diameter trials
  double estimate = 0.0;
  double wilson_lo = 0.0;
  double wilson_hi = 1.0;
  double upper_bound = 0.0;        // 2 / (c/2k)^k
  bool upper_informative = false;  // the bound is < 1
  double d_coeff = 0.0;            // D = 1 / (2k c^(k-1))
  double lower_bound = 0.0;        // D^k / 3
};

/// Empirical tail P(diameter > c * q^(1/k)) per grid value, with the
/// second-moment bounds attached. Records must be one homogeneous cell;
/// unreachable and errored trials are excluded from n.
std::vector<TailEstimate> tail_estimates(const std::vector<TrialRecord>& records,
                                         const std::vector<double>& c_grid);

struct BoundCheck {
  double c = 0.0;
  bool upper_checked = false;  // only where the upper bound is informative
  bool upper_pass = true;      // wilson_lo <= upper bound
  bool lower_pass = true;      // wilson_hi >= lower bound
};

struct BoundCheckReport {
  std::vector<BoundCheck> per_c;
  bool tail_monotone = true;         // exceed counts non-increasing in c
  uint64_t relation_opportunities = 0;  // probes at the derived bound that fired
  uint64_t relation_violations = 0;     // fired but diameter failed to exceed c q^(1/k)
  uint64_t counting_checked = 0;
  uint64_t counting_violations = 0;  // finite directed diameters below q^(1/k) - k

  bool all_pass() const;
};

/// Consistency checks of the empirical tail against the explicit bounds,
/// plus the per-trial implication "zero relation at the derived probe bound
/// forces diameter > c q^(1/k)". Requires prime q and k >= 2.
BoundCheckReport bound_checks(const std::vector<TrialRecord>& records,
                              const std::vector<double>& c_grid);

struct DistributionSummary {
  uint64_t count = 0;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double stddev = 0.0;          // sample standard deviation
  double deciles[9] = {};       // p10 .. p90
  double p25 = 0.0;
  double p75 = 0.0;

  double median() const { return deciles[4]; }
  double iqr() const { return p75 - p25; }
};

/// Scaled-diameter summary for cross-q comparison. Requires at least 20
/// finite-diameter records; quantiles use linear interpolation.
DistributionSummary scaled_distribution(const std::vector<TrialRecord>& records);

}  // namespace cayley
