#include "cayley/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <tuple>

#include "cayley/distance.hpp"
#include "cayley/errors.hpp"
#include "cayley/sampling.hpp"

namespace cayley {

double kth_root(uint32_t q, uint32_t k) {
  return std::pow(static_cast<double>(q), 1.0 / static_cast<double>(k));
}

bool counting_bound_ok(uint32_t q, uint32_t k, uint32_t diameter) {
  return static_cast<double>(diameter) >=
         kth_root(q, k) - static_cast<double>(k);
}

namespace {

void validate_config(const SweepConfig& config) {
  if (config.q_list.empty()) throw Error("sweep config: q_list is empty");
  if (config.k_list.empty()) throw Error("sweep config: k_list is empty");
  if (config.modes.empty()) throw Error("sweep config: modes is empty");
  if (config.trials == 0) throw Error("sweep config: trials must be >= 1");
  for (uint32_t q : config.q_list) GroupSpec::make(q);
  for (uint32_t k : config.k_list) {
    if (k == 0) throw Error("sweep config: k must be >= 1");
  }
  for (double c : config.c_grid) {
    if (!(c > 0)) throw Error("sweep config: c_grid values must be positive");
  }
  for (double d : config.l_probes) {
    if (!(d > 0)) throw Error("sweep config: l_probes values must be positive");
  }
}

TrialRecord run_one_trial(const GroupSpec& group, uint32_t k, StepMode mode,
                          const SweepConfig& config, uint64_t trial_index) {
  TrialRecord rec;
  rec.trial_index = trial_index;
  rec.q = group.q;
  rec.k = k;
  rec.mode = mode;
  rec.master_seed = config.master_seed;
  try {
    const GeneratorSet gens = sample_generators(
        group, k, mode, RandomSource{config.master_seed, trial_index});
    rec.gens = gens.gens;

    const DistanceProfile profile = distance_profile(group, gens);
    if (profile.fully_reachable()) {
      rec.diameter = profile.eccentricity;
      rec.scaled_diameter = profile.eccentricity / kth_root(group.q, k);
    }

    const double root = kth_root(group.q, k);
    for (double coeff : config.l_probes) {
      ProbeResult probe;
      probe.bound = static_cast<uint32_t>(std::floor(coeff * root));
      probe.covered_count =
          coverage_report(group, gens, probe.bound, config.work_budget).covered_count;
      probe.relation_fired = find_zero_relation(group, gens, probe.bound).has_value();
      rec.probes.push_back(probe);
    }
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  return rec;
}

}  // namespace

std::vector<TrialRecord> run_trials(const SweepConfig& config) {
  validate_config(config);

  struct Task {
    GroupSpec group;
    uint32_t k;
    StepMode mode;
    uint64_t trial_index;
  };
  std::vector<Task> tasks;
  for (uint32_t q : config.q_list) {
    const GroupSpec group = GroupSpec::make(q);
    for (uint32_t k : config.k_list) {
      for (StepMode mode : config.modes) {
        for (uint32_t t = 0; t < config.trials; ++t) {
          tasks.push_back(Task{group, k, mode, t});
        }
      }
    }
  }

  std::vector<TrialRecord> records(tasks.size());
  unsigned thread_count = config.threads != 0
                              ? config.threads
                              : std::max(1u, std::thread::hardware_concurrency());
  thread_count = std::min<unsigned>(thread_count,
                                    static_cast<unsigned>(std::max<size_t>(tasks.size(), 1)));

  if (thread_count <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) {
      const Task& t = tasks[i];
      records[i] = run_one_trial(t.group, t.k, t.mode, config, t.trial_index);
    }
  } else {
    std::atomic<size_t> cursor{0};
    auto worker = [&] {
      for (;;) {
        const size_t i = cursor.fetch_add(1);
        if (i >= tasks.size()) return;
        const Task& t = tasks[i];
        records[i] = run_one_trial(t.group, t.k, t.mode, config, t.trial_index);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(thread_count);
    for (unsigned i = 0; i < thread_count; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::sort(records.begin(), records.end(),
            [](const TrialRecord& a, const TrialRecord& b) {
              return std::tie(a.q, a.k, a.mode, a.trial_index) <
                     std::tie(b.q, b.k, b.mode, b.trial_index);
            });
  return records;
}

WilsonInterval wilson95(uint64_t successes, uint64_t n) {
  if (n == 0) throw Error("wilson95 requires n >= 1");
  constexpr double z = 1.96;
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(successes) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (p + z2 / (2.0 * nn)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
  // clamp to [0,1] and make sure rounding never pushes the point outside
  WilsonInterval wi{std::max(0.0, center - half), std::min(1.0, center + half)};
  wi.lo = std::min(wi.lo, p);
  wi.hi = std::max(wi.hi, p);
  return wi;
}

namespace {

struct CellShape {
  uint32_t q;
  uint32_t k;
  StepMode mode;
};

CellShape homogeneous_shape(const std::vector<TrialRecord>& records) {
  if (records.empty()) throw Error("empty record set");
  const CellShape shape{records.front().q, records.front().k, records.front().mode};
  for (const TrialRecord& rec : records) {
    if (rec.q != shape.q || rec.k != shape.k || rec.mode != shape.mode) {
      throw Error("records must come from a single (q, k, mode) cell");
    }
  }
  return shape;
}

double derived_d(double c, uint32_t k) {
  return 1.0 / (2.0 * k * std::pow(c, static_cast<double>(k) - 1.0));
}

}  // namespace

std::vector<TailEstimate> tail_estimates(const std::vector<TrialRecord>& records,
                                         const std::vector<double>& c_grid) {
  const CellShape shape = homogeneous_shape(records);
  const double root = kth_root(shape.q, shape.k);

  uint64_t n = 0;
  for (const TrialRecord& rec : records) {
    if (rec.ok() && rec.diameter.has_value()) ++n;
  }
  if (n == 0) throw Error("no finite-diameter trials to estimate from");

  std::vector<TailEstimate> out;
  out.reserve(c_grid.size());
  for (double c : c_grid) {
    TailEstimate est;
    est.c = c;
    est.n = n;
    for (const TrialRecord& rec : records) {
      if (!rec.ok() || !rec.diameter.has_value()) continue;
      if (static_cast<double>(*rec.diameter) > c * root) ++est.exceed_count;
    }
    est.estimate = static_cast<double>(est.exceed_count) / static_cast<double>(n);
    const WilsonInterval wi = wilson95(est.exceed_count, n);
    est.wilson_lo = wi.lo;
    est.wilson_hi = wi.hi;
    est.upper_bound =
        2.0 / std::pow(c / (2.0 * shape.k), static_cast<double>(shape.k));
    est.upper_informative = est.upper_bound < 1.0;
    est.d_coeff = derived_d(c, shape.k);
    est.lower_bound = std::pow(est.d_coeff, static_cast<double>(shape.k)) / 3.0;
    out.push_back(est);
  }
  return out;
}

bool BoundCheckReport::all_pass() const {
  for (const BoundCheck& check : per_c) {
    if (check.upper_checked && !check.upper_pass) return false;
    if (!check.lower_pass) return false;
  }
  return tail_monotone && relation_violations == 0 && counting_violations == 0;
}

BoundCheckReport bound_checks(const std::vector<TrialRecord>& records,
                              const std::vector<double>& c_grid) {
  const CellShape shape = homogeneous_shape(records);
  if (!GroupSpec::make(shape.q).is_prime) {
    throw Error("bound_checks requires a prime modulus, got " + std::to_string(shape.q));
  }
  if (shape.k < 2) throw Error("bound_checks requires k >= 2");

  const double root = kth_root(shape.q, shape.k);
  const std::vector<TailEstimate> tails = tail_estimates(records, c_grid);

  BoundCheckReport report;
  for (const TailEstimate& est : tails) {
    BoundCheck check;
    check.c = est.c;
    check.upper_checked = est.upper_informative;
    check.upper_pass = !check.upper_checked || est.wilson_lo <= est.upper_bound;
    check.lower_pass = est.wilson_hi >= est.lower_bound;
    report.per_c.push_back(check);
  }
  for (size_t i = 0; i + 1 < tails.size(); ++i) {
    // the grid need not be sorted; compare only adjacent increasing pairs
    if (tails[i + 1].c >= tails[i].c &&
        tails[i + 1].exceed_count > tails[i].exceed_count) {
      report.tail_monotone = false;
    }
  }

  for (const TailEstimate& est : tails) {
    const uint32_t probe_bound =
        static_cast<uint32_t>(std::floor(est.d_coeff * root));
    for (const TrialRecord& rec : records) {
      if (!rec.ok()) continue;
      for (const ProbeResult& probe : rec.probes) {
        if (probe.bound != probe_bound || !probe.relation_fired) continue;
        report.relation_opportunities += 1;
        const bool exceeds = !rec.diameter.has_value() ||
                             static_cast<double>(*rec.diameter) > est.c * root;
        if (!exceeds) report.relation_violations += 1;
      }
    }
  }

  if (records.front().mode == StepMode::Directed) {
    for (const TrialRecord& rec : records) {
      if (!rec.ok() || !rec.diameter.has_value()) continue;
      report.counting_checked += 1;
      if (!counting_bound_ok(rec.q, rec.k, *rec.diameter)) {
        report.counting_violations += 1;
      }
    }
  }
  return report;
}

namespace {

// Linear-interpolation quantile over a sorted sample (the common "type 7").
double quantile_sorted(const std::vector<double>& sorted, double p) {
  const size_t n = sorted.size();
  if (n == 1) return sorted[0];
  const double h = p * static_cast<double>(n - 1);
  const size_t lo = static_cast<size_t>(std::floor(h));
  const size_t hi = std::min(lo + 1, n - 1);
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

DistributionSummary scaled_distribution(const std::vector<TrialRecord>& records) {
  homogeneous_shape(records);
  std::vector<double> values;
  values.reserve(records.size());
  for (const TrialRecord& rec : records) {
    if (rec.ok() && rec.diameter.has_value()) values.push_back(rec.scaled_diameter);
  }
  if (values.size() < 20) {
    throw Error("scaled_distribution requires at least 20 finite-diameter records, got " +
                std::to_string(values.size()));
  }
  std::sort(values.begin(), values.end());

  DistributionSummary summary;
  summary.count = values.size();
  summary.min = values.front();
  summary.max = values.back();

  double sum = 0.0;
  for (double v : values) sum += v;
  summary.mean = sum / static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - summary.mean) * (v - summary.mean);
  summary.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));

  for (int d = 1; d <= 9; ++d) {
    summary.deciles[d - 1] = quantile_sorted(values, d / 10.0);
  }
  summary.p25 = quantile_sorted(values, 0.25);
  summary.p75 = quantile_sorted(values, 0.75);
  return summary;
}

}  // namespace cayley
