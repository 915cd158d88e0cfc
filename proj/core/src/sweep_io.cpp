#include "cayley/sweep_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <map>
#include <ostream>
#include <tuple>

#include "cayley/errors.hpp"
#include "cayley/version.hpp"

namespace cayley {

namespace {

std::string trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  size_t pos = 0;
  while (pos <= value.size()) {
    size_t end = value.find(',', pos);
    if (end == std::string::npos) end = value.size();
    const std::string item = trim(value.substr(pos, end - pos));
    if (!item.empty()) items.push_back(item);
    pos = end + 1;
    if (end == value.size()) break;
  }
  return items;
}

uint64_t parse_u64(const std::string& text, const std::string& key) {
  uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error("sweep config: bad integer '" + text + "' for key " + key);
  }
  return out;
}

double parse_f64(const std::string& text, const std::string& key) {
  double out = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error("sweep config: bad number '" + text + "' for key " + key);
  }
  return out;
}

}  // namespace

SweepConfig parse_sweep_config(std::istream& in) {
  SweepConfig config;
  bool saw_q = false, saw_k = false, saw_modes = false, saw_trials = false,
       saw_seed = false;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string text = trim(line);
    if (text.empty()) continue;
    const size_t eq = text.find('=');
    if (eq == std::string::npos) {
      throw Error("sweep config line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));

    if (key == "q_list") {
      for (const std::string& item : split_list(value)) {
        config.q_list.push_back(static_cast<uint32_t>(parse_u64(item, key)));
      }
      saw_q = true;
    } else if (key == "k_list") {
      for (const std::string& item : split_list(value)) {
        config.k_list.push_back(static_cast<uint32_t>(parse_u64(item, key)));
      }
      saw_k = true;
    } else if (key == "modes") {
      for (const std::string& item : split_list(value)) {
        const auto mode = step_mode_from_string(item);
        if (!mode) throw Error("sweep config: unknown mode '" + item + "'");
        config.modes.push_back(*mode);
      }
      saw_modes = true;
    } else if (key == "trials") {
      config.trials = static_cast<uint32_t>(parse_u64(value, key));
      saw_trials = true;
    } else if (key == "c_grid") {
      for (const std::string& item : split_list(value)) {
        config.c_grid.push_back(parse_f64(item, key));
      }
    } else if (key == "l_probes") {
      for (const std::string& item : split_list(value)) {
        config.l_probes.push_back(parse_f64(item, key));
      }
    } else if (key == "master_seed") {
      config.master_seed = parse_u64(value, key);
      saw_seed = true;
    } else if (key == "budget") {
      config.work_budget = parse_u64(value, key);
    } else {
      throw Error("sweep config line " + std::to_string(lineno) + ": unknown key '" +
                  key + "'");
    }
  }

  if (!saw_q) throw Error("sweep config: missing q_list");
  if (!saw_k) throw Error("sweep config: missing k_list");
  if (!saw_modes) throw Error("sweep config: missing modes");
  if (!saw_trials) throw Error("sweep config: missing trials");
  if (!saw_seed) throw Error("sweep config: missing master_seed");
  return config;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path);
  return parse_sweep_config(in);
}

std::string format_double17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

template <typename T, typename Fn>
std::string join_probes(const std::vector<ProbeResult>& probes, Fn&& field) {
  std::string out;
  for (size_t i = 0; i < probes.size(); ++i) {
    if (i > 0) out.push_back('+');
    out += std::to_string(static_cast<T>(field(probes[i])));
  }
  return out;
}

}  // namespace

void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
  out << kTrialsCsvHeader << '\n';
  for (const TrialRecord& rec : records) {
    out << rec.trial_index << ',' << rec.q << ',' << rec.k << ','
        << to_string(rec.mode) << ',' << rec.master_seed << ','
        << format_gens(rec.gens) << ',';
    if (!rec.ok()) {
      out << "error";
    } else if (rec.diameter.has_value()) {
      out << *rec.diameter;
    } else {
      out << "unreachable";
    }
    out << ',';
    if (rec.ok() && rec.diameter.has_value()) out << format_double17(rec.scaled_diameter);
    out << ',';
    out << join_probes<int>(rec.probes,
                            [](const ProbeResult& p) { return p.relation_fired ? 1 : 0; });
    out << ',';
    out << join_probes<uint32_t>(rec.probes,
                                 [](const ProbeResult& p) { return p.covered_count; });
    out << ',';
    out << join_probes<uint32_t>(rec.probes,
                                 [](const ProbeResult& p) { return p.bound; });
    out << '\n';
  }
}

// The summary schema is fixed, so the JSON is written directly: keys keep
// insertion order and every float goes through format_double17.
void write_summary_json(std::ostream& out, const SweepConfig& config,
                        const std::vector<TrialRecord>& records,
                        const std::string& generated_at) {
  // grouping key -> records, in sorted cell order
  struct Cell {
    uint32_t q;
    uint32_t k;
    StepMode mode;
    std::vector<TrialRecord> records;
  };
  std::map<std::tuple<uint32_t, uint32_t, StepMode>, Cell> cells;
  for (const TrialRecord& rec : records) {
    auto key = std::make_tuple(rec.q, rec.k, rec.mode);
    auto [it, inserted] = cells.try_emplace(key);
    if (inserted) {
      it->second.q = rec.q;
      it->second.k = rec.k;
      it->second.mode = rec.mode;
    }
    it->second.records.push_back(rec);
  }

  out << "{\n";
  out << "  \"tool\": \"" << kToolName << ' ' << kVersion << "\",\n";
  out << "  \"generated_at\": \"" << generated_at << "\",\n";

  out << "  \"config\": {\n";
  out << "    \"q_list\": [";
  for (size_t i = 0; i < config.q_list.size(); ++i) {
    out << (i ? "," : "") << config.q_list[i];
  }
  out << "],\n    \"k_list\": [";
  for (size_t i = 0; i < config.k_list.size(); ++i) {
    out << (i ? "," : "") << config.k_list[i];
  }
  out << "],\n    \"modes\": [";
  for (size_t i = 0; i < config.modes.size(); ++i) {
    out << (i ? "," : "") << '"' << to_string(config.modes[i]) << '"';
  }
  out << "],\n    \"trials\": " << config.trials;
  out << ",\n    \"c_grid\": [";
  for (size_t i = 0; i < config.c_grid.size(); ++i) {
    out << (i ? "," : "") << format_double17(config.c_grid[i]);
  }
  out << "],\n    \"l_probes\": [";
  for (size_t i = 0; i < config.l_probes.size(); ++i) {
    out << (i ? "," : "") << format_double17(config.l_probes[i]);
  }
  out << "],\n    \"master_seed\": " << config.master_seed;
  out << ",\n    \"budget\": " << config.work_budget;
  out << "\n  },\n";

  out << "  \"cells\": [";
  bool first_cell = true;
  for (const auto& [key, cell] : cells) {
    if (!first_cell) out << ',';
    first_cell = false;
    out << "\n    {\n";
    out << "      \"q\": " << cell.q << ",\n";
    out << "      \"k\": " << cell.k << ",\n";
    out << "      \"mode\": \"" << to_string(cell.mode) << "\",\n";

    uint64_t finite = 0, unreachable = 0, errors = 0;
    for (const TrialRecord& rec : cell.records) {
      if (!rec.ok()) {
        ++errors;
      } else if (rec.diameter.has_value()) {
        ++finite;
      } else {
        ++unreachable;
      }
    }
    out << "      \"trials\": " << cell.records.size() << ",\n";
    out << "      \"finite\": " << finite << ",\n";
    out << "      \"unreachable\": " << unreachable << ",\n";
    out << "      \"errors\": " << errors << ",\n";

    out << "      \"scaled\": ";
    if (finite >= 20) {
      const DistributionSummary s = scaled_distribution(cell.records);
      out << "{\n";
      out << "        \"count\": " << s.count << ",\n";
      out << "        \"min\": " << format_double17(s.min) << ",\n";
      for (int d = 1; d <= 9; ++d) {
        out << "        \"p" << d * 10
            << "\": " << format_double17(s.deciles[d - 1]) << ",\n";
      }
      out << "        \"p25\": " << format_double17(s.p25) << ",\n";
      out << "        \"p75\": " << format_double17(s.p75) << ",\n";
      out << "        \"iqr\": " << format_double17(s.iqr()) << ",\n";
      out << "        \"mean\": " << format_double17(s.mean) << ",\n";
      out << "        \"stddev\": " << format_double17(s.stddev) << ",\n";
      out << "        \"max\": " << format_double17(s.max) << "\n";
      out << "      },\n";
    } else {
      out << "null,\n";
    }

    out << "      \"tail\": ";
    const bool can_estimate = finite > 0 && !config.c_grid.empty();
    if (can_estimate) {
      const std::vector<TailEstimate> tails = tail_estimates(cell.records, config.c_grid);
      out << "[";
      for (size_t i = 0; i < tails.size(); ++i) {
        const TailEstimate& t = tails[i];
        out << (i ? "," : "") << "\n        {\"c\": " << format_double17(t.c)
            << ", \"count\": " << t.exceed_count << ", \"n\": " << t.n
            << ", \"estimate\": " << format_double17(t.estimate)
            << ", \"wilson_lo\": " << format_double17(t.wilson_lo)
            << ", \"wilson_hi\": " << format_double17(t.wilson_hi)
            << ", \"paper_upper\": " << format_double17(t.upper_bound)
            << ", \"upper_informative\": " << (t.upper_informative ? "true" : "false")
            << ", \"d\": " << format_double17(t.d_coeff)
            << ", \"paper_lower\": " << format_double17(t.lower_bound) << "}";
      }
      out << "\n      ],\n";
    } else {
      out << "null,\n";
    }

    out << "      \"checks\": ";
    const GroupSpec group = GroupSpec::make(cell.q);
    if (can_estimate && group.is_prime && cell.k >= 2) {
      const BoundCheckReport report = bound_checks(cell.records, config.c_grid);
      out << "{\n";
      out << "        \"per_c\": [";
      for (size_t i = 0; i < report.per_c.size(); ++i) {
        const BoundCheck& c = report.per_c[i];
        out << (i ? "," : "") << "\n          {\"c\": " << format_double17(c.c)
            << ", \"upper_checked\": " << (c.upper_checked ? "true" : "false")
            << ", \"upper_pass\": " << (c.upper_pass ? "true" : "false")
            << ", \"lower_pass\": " << (c.lower_pass ? "true" : "false") << "}";
      }
      out << "\n        ],\n";
      out << "        \"tail_monotone\": " << (report.tail_monotone ? "true" : "false")
          << ",\n";
      out << "        \"relation_opportunities\": " << report.relation_opportunities
          << ",\n";
      out << "        \"relation_violations\": " << report.relation_violations << ",\n";
      out << "        \"counting_checked\": " << report.counting_checked << ",\n";
      out << "        \"counting_violations\": " << report.counting_violations << ",\n";
      out << "        \"all_pass\": " << (report.all_pass() ? "true" : "false") << "\n";
      out << "      },\n";
    } else {
      // bound checks need a prime modulus, k >= 2, and a C grid
      out << "null,\n";
    }
    out << "      \"skipped_checks\": "
        << ((can_estimate && group.is_prime && cell.k >= 2) ? "false" : "true") << "\n";
    out << "    }";
  }
  out << "\n  ]\n}\n";
}

std::string current_utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

}  // namespace cayley
