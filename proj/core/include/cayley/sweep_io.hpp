#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cayley/harness.hpp"

namespace cayley {

/// Flat key=value sweep configuration. Keys: q_list, k_list, modes, trials,
/// c_grid, l_probes, master_seed, budget. Lists are comma separated; '#'
/// starts a comment. Unknown keys are errors.
SweepConfig parse_sweep_config(std::istream& in);
SweepConfig load_sweep_config(const std::string& path);

/// %.17g: every floating value round-trips exactly through text.
std::string format_double17(double v);

inline constexpr const char* kTrialsCsvHeader =
    "trial_index,q,k,mode,seed,gens,diameter,scaled_diameter,"
    "relation_fired,coverage_count,L_used";

/// One row per record; gens and per-probe columns are '+'-joined, the
/// diameter column holds an integer, "unreachable", or "error".
void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records);

/// Summary document: config echo, per-cell quantiles, tail table, check
/// verdicts and violation counts. Deterministic except for the single
/// "generated_at" key, which the caller supplies.
void write_summary_json(std::ostream& out, const SweepConfig& config,
                        const std::vector<TrialRecord>& records,
                        const std::string& generated_at);

std::string current_utc_timestamp();

}  // namespace cayley
