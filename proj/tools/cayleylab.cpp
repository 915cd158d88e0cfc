// cayleylab: exact diameters, bounded-exponent coverage, and seeded Monte
// Carlo sweeps for random Cayley graphs of Z_q.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "cayley/coverage.hpp"
#include "cayley/distance.hpp"
#include "cayley/errors.hpp"
#include "cayley/harness.hpp"
#include "cayley/oracle.hpp"
#include "cayley/sampling.hpp"
#include "cayley/sweep_io.hpp"
#include "cayley/verify.hpp"
#include "cayley/version.hpp"

namespace {

using namespace cayley;

StepMode parse_mode_or_throw(const std::string& text) {
  const auto mode = step_mode_from_string(text);
  if (!mode) throw Error("unknown mode '" + text + "' (directed|symmetric)");
  return *mode;
}

BfsStrategy parse_strategy_or_throw(const std::string& text) {
  if (text == "auto") return BfsStrategy::Auto;
  if (text == "queue") return BfsStrategy::FrontierQueue;
  if (text == "bitset") return BfsStrategy::BitsetSweep;
  throw Error("unknown strategy '" + text + "' (auto|queue|bitset)");
}

int run_diameter(uint64_t q_value, const std::string& gens_text, const std::string& mode_text,
                 const std::string& profile_path, const std::string& strategy_text) {
  const GroupSpec group = GroupSpec::make(q_value);
  const GeneratorSet gens =
      make_generator_set(group, parse_gens(gens_text), parse_mode_or_throw(mode_text));
  const DistanceProfile profile =
      distance_profile(group, gens, parse_strategy_or_throw(strategy_text));

  if (!profile_path.empty()) {
    std::ofstream out(profile_path);
    if (!out) throw Error("cannot open " + profile_path);
    out << "vertex,distance\n";
    for (uint32_t v = 0; v < profile.q; ++v) {
      out << v << ',';
      if (profile.distances[v] == kUnreachableDistance) {
        out << "unreachable";
      } else {
        out << profile.distances[v];
      }
      out << '\n';
    }
  }

  if (const auto diameter = profile.diameter(); diameter.has_value()) {
    std::cout << *diameter << '\n';
  } else {
    std::cout << "unreachable\n";
  }
  return 0;
}

int run_sample(uint64_t q_value, uint32_t k, const std::string& mode_text, uint64_t seed,
               uint64_t stream, bool nonzero, bool distinct) {
  const GroupSpec group = GroupSpec::make(q_value);
  const GeneratorSet gens =
      sample_generators(group, k, parse_mode_or_throw(mode_text),
                        RandomSource{seed, stream}, SampleOptions{nonzero, distinct});
  std::cout << format_gens(gens.gens, ',') << '\n';
  return 0;
}

int run_coverage(uint64_t q_value, const std::string& gens_text, uint32_t bound,
                 const std::string& mode_text, bool hits, uint64_t budget) {
  const GroupSpec group = GroupSpec::make(q_value);
  const GeneratorSet gens =
      make_generator_set(group, parse_gens(gens_text), parse_mode_or_throw(mode_text));
  const CoverageReport report = coverage_report(group, gens, bound, budget);
  std::cout << "covered_count=" << report.covered_count << '\n'
            << "full=" << (report.full ? "true" : "false") << '\n';
  if (hits) {
    const HitCountTable table = hit_counts(group, gens, bound, budget);
    std::cout << "x,count\n";
    for (uint32_t x = 0; x < table.q; ++x) {
      std::cout << x << ',' << table.counts[x] << '\n';
    }
  }
  return 0;
}

int run_relation(uint64_t q_value, const std::string& gens_text, uint32_t bound,
                 uint64_t budget) {
  const GroupSpec group = GroupSpec::make(q_value);
  const GeneratorSet gens =
      make_generator_set(group, parse_gens(gens_text), StepMode::Directed);
  const auto witness = find_zero_relation(group, gens, bound, budget);
  if (witness.has_value()) {
    std::cout << format_gens(witness->exponents, ',') << '\n';
  } else {
    std::cout << "none\n";
  }
  return 0;
}

int run_sweep(const std::string& config_path, const std::string& out_path,
              const std::string& summary_path, unsigned threads) {
  SweepConfig config = load_sweep_config(config_path);
  if (threads != 0) config.threads = threads;

  const std::vector<TrialRecord> records = run_trials(config);

  std::ofstream trials_out(out_path);
  if (!trials_out) throw Error("cannot open " + out_path);
  write_trials_csv(trials_out, records);
  if (!trials_out) throw Error("failed writing " + out_path);

  std::ofstream summary_out(summary_path);
  if (!summary_out) throw Error("cannot open " + summary_path);
  write_summary_json(summary_out, config, records, current_utc_timestamp());
  if (!summary_out) throw Error("failed writing " + summary_path);

  uint64_t errors = 0;
  for (const TrialRecord& rec : records) {
    if (!rec.ok()) {
      ++errors;
      std::cerr << "trial " << rec.trial_index << " (q=" << rec.q << ", k=" << rec.k
                << ", " << to_string(rec.mode) << "): " << rec.error << '\n';
    }
  }
  std::cout << records.size() << " trials written to " << out_path << ", summary in "
            << summary_path;
  if (errors > 0) std::cout << " (" << errors << " trials errored)";
  std::cout << '\n';
  return 0;
}

int run_verify(const std::string& suite, uint64_t seed, unsigned threads) {
  const verify::SuiteResult result = verify::run_suite(suite, seed, threads);
  for (const verify::CheckResult& check : result.checks) {
    std::cout << '[' << result.suite << "] " << check.name << ": "
              << (check.passed ? "PASS" : "FAIL") << " — " << check.detail << '\n';
  }
  if (result.counting_checked > 0) {
    std::cout << '[' << result.suite << "] counting-lower-bound: "
              << (result.counting_violations == 0 ? "PASS" : "FAIL") << " — "
              << result.counting_checked << " diameters checked, "
              << result.counting_violations << " below q^(1/k) - k\n";
  }
  std::cout << "RESULT: " << (result.passed() ? "PASS" : "FAIL") << '\n';
  return result.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-diameter laboratory for random Cayley graphs of Z_q"};
  app.set_version_flag("--version", std::string(cayley::kToolName) + " " + cayley::kVersion);
  app.require_subcommand(1);

  // diameter
  auto* diameter_cmd = app.add_subcommand("diameter", "exact diameter of one Cayley graph");
  uint64_t q_value = 0;
  std::string gens_text, mode_text = "directed", profile_path, strategy_text = "auto";
  diameter_cmd->add_option("--q", q_value, "modulus")->required();
  diameter_cmd->add_option("--gens", gens_text, "comma-separated residues")->required();
  diameter_cmd->add_option("--mode", mode_text, "directed|symmetric");
  diameter_cmd->add_option("--profile", profile_path, "write per-vertex distances CSV");
  diameter_cmd->add_option("--strategy", strategy_text, "auto|queue|bitset");

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "sample a generator set");
  uint32_t sample_k = 0;
  uint64_t sample_seed = 0, sample_stream = 0;
  bool sample_nonzero = false, sample_distinct = false;
  sample_cmd->add_option("--q", q_value, "modulus")->required();
  sample_cmd->add_option("--k", sample_k, "number of generators")->required();
  sample_cmd->add_option("--mode", mode_text, "directed|symmetric");
  sample_cmd->add_option("--seed", sample_seed, "master seed")->required();
  sample_cmd->add_option("--stream", sample_stream, "stream id (trial index)");
  sample_cmd->add_flag("--nonzero", sample_nonzero, "redraw zeros (off in the base model)");
  sample_cmd->add_flag("--distinct", sample_distinct,
                       "redraw duplicates (off in the base model)");

  // coverage
  auto* coverage_cmd =
      app.add_subcommand("coverage", "bounded-exponent coverage set T_L");
  uint32_t bound = 0;
  bool hits = false;
  uint64_t budget = cayley::kDefaultShiftBudget;
  coverage_cmd->add_option("--q", q_value, "modulus")->required();
  coverage_cmd->add_option("--gens", gens_text, "comma-separated residues")->required();
  coverage_cmd->add_option("--L", bound, "exponent bound")->required();
  coverage_cmd->add_option("--mode", mode_text, "directed|symmetric");
  coverage_cmd->add_flag("--hits", hits, "also print the per-residue hit counts");
  coverage_cmd->add_option("--budget", budget, "work budget in bit-steps");

  // relation
  auto* relation_cmd =
      app.add_subcommand("relation", "smallest zero relation in the exponent box");
  uint64_t join_budget = cayley::kDefaultJoinBudget;
  relation_cmd->add_option("--q", q_value, "modulus")->required();
  relation_cmd->add_option("--gens", gens_text, "comma-separated residues")->required();
  relation_cmd->add_option("--L", bound, "exponent bound")->required();
  relation_cmd->add_option("--budget", join_budget, "join table budget in entries");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "seeded Monte Carlo sweep");
  std::string config_path, out_path, summary_path;
  unsigned threads = 0;
  sweep_cmd->add_option("--config", config_path, "key=value config file")->required();
  sweep_cmd->add_option("--out", out_path, "trials CSV output path")->required();
  sweep_cmd->add_option("--summary", summary_path, "summary JSON output path")->required();
  sweep_cmd->add_option("--threads", threads, "worker threads (0 = auto)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run an acceptance suite");
  std::string suite;
  uint64_t verify_seed = cayley::verify::kDefaultSeed;
  verify_cmd->add_option("--suite", suite, "oracle|events|coprime|coverage-links|ub|lb")
      ->required();
  verify_cmd->add_option("--seed", verify_seed, "master seed for the suite");
  verify_cmd->add_option("--threads", threads, "worker threads (0 = auto)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "cayleylab: " << e.what() << '\n';
    return 2;
  }

  try {
    if (diameter_cmd->parsed()) {
      return run_diameter(q_value, gens_text, mode_text, profile_path, strategy_text);
    }
    if (sample_cmd->parsed()) {
      return run_sample(q_value, sample_k, mode_text, sample_seed, sample_stream,
                        sample_nonzero, sample_distinct);
    }
    if (coverage_cmd->parsed()) {
      return run_coverage(q_value, gens_text, bound, mode_text, hits, budget);
    }
    if (relation_cmd->parsed()) {
      return run_relation(q_value, gens_text, bound, join_budget);
    }
    if (sweep_cmd->parsed()) {
      return run_sweep(config_path, out_path, summary_path, threads);
    }
    if (verify_cmd->parsed()) {
      return run_verify(suite, verify_seed, threads);
    }
  } catch (const cayley::Error& e) {
    std::cerr << "cayleylab: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "cayleylab: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
