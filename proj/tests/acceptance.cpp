// Acceptance suite: runs every verification criterion at its stated
// tolerance and prints one PASS/FAIL line per criterion.
//
// Usage: acceptance [--cli PATH] [--seed N] [--threads N]
// The CLI path is needed for the performance/determinism criterion; ctest
// passes the built cayleylab binary.

#include <fcntl.h>
#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cayley/errors.hpp"
#include "cayley/group.hpp"
#include "cayley/sampling.hpp"
#include "cayley/verify.hpp"

namespace {

using cayley::verify::CheckResult;
using cayley::verify::SuiteResult;

struct Criterion {
  int number;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

const CheckResult& find_check(const SuiteResult& suite, const std::string& name) {
  for (const CheckResult& check : suite.checks) {
    if (check.name == name) return check;
  }
  throw cayley::Error("suite " + suite.suite + " is missing check " + name);
}

void print_criterion(const Criterion& c) {
  std::printf("criterion %2d [%s] %s (%.1fs) %s\n", c.number, c.name.c_str(),
              c.passed ? "PASS" : "FAIL", c.seconds, c.detail.c_str());
  std::fflush(stdout);
}

struct ChildResult {
  int exit_code = -1;
  double seconds = 0.0;
  long maxrss_kb = 0;
};

ChildResult run_child(const std::vector<std::string>& args, const std::string& stdout_path) {
  std::vector<char*> argv;
  argv.reserve(args.size() + 1);
  for (const std::string& a : args) argv.push_back(const_cast<char*>(a.c_str()));
  argv.push_back(nullptr);

  const Timer timer;
  const pid_t pid = fork();
  if (pid < 0) throw cayley::Error("fork failed");
  if (pid == 0) {
    const int fd = open(stdout_path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
    if (fd >= 0) {
      dup2(fd, STDOUT_FILENO);
      close(fd);
    }
    execv(argv[0], argv.data());
    std::perror("execv");
    _exit(127);
  }
  int status = 0;
  struct rusage usage{};
  if (wait4(pid, &status, 0, &usage) < 0) throw cayley::Error("wait4 failed");

  ChildResult result;
  result.seconds = timer.seconds();
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.maxrss_kb = usage.ru_maxrss;
  return result;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

bool files_identical(const std::string& a, const std::string& b) {
  const auto la = read_lines(a);
  const auto lb = read_lines(b);
  return !la.empty() && la == lb;
}

bool files_identical_except_timestamp(const std::string& a, const std::string& b) {
  const auto la = read_lines(a);
  const auto lb = read_lines(b);
  if (la.empty() || la.size() != lb.size()) return false;
  for (size_t i = 0; i < la.size(); ++i) {
    if (la[i] == lb[i]) continue;
    const bool stamp = la[i].find("generated_at") != std::string::npos &&
                       lb[i].find("generated_at") != std::string::npos;
    if (!stamp) return false;
  }
  return true;
}

Criterion performance_and_determinism(const std::string& cli, uint64_t seed) {
  Criterion crit;
  crit.number = 10;
  crit.name = "performance-and-determinism";
  const Timer timer;

  if (cli.empty() || !std::filesystem::exists(cli)) {
    crit.passed = false;
    crit.detail = "cayleylab binary not found; pass --cli PATH";
    crit.seconds = timer.seconds();
    return crit;
  }

  std::string detail;
  bool passed = true;

  char tmpl[] = "/tmp/cayley-acceptance-XXXXXX";
  if (mkdtemp(tmpl) == nullptr) throw cayley::Error("mkdtemp failed");
  const std::filesystem::path dir(tmpl);

  // distance profile at q = 10^7, k = 3: at most 5 seconds and 100 MB
  {
    const cayley::GroupSpec group = cayley::GroupSpec::make(10'000'000);
    const cayley::GeneratorSet gens = cayley::sample_generators(
        group, 3, cayley::StepMode::Directed, cayley::RandomSource{seed, 0});
    const std::string gens_text = cayley::format_gens(gens.gens, ',');
    const ChildResult child =
        run_child({cli, "diameter", "--q", "10000000", "--gens", gens_text, "--mode",
                   "directed"},
                  (dir / "diameter.out").string());
    const bool ok =
        child.exit_code == 0 && child.seconds <= 5.0 && child.maxrss_kb <= 100 * 1024;
    passed = passed && ok;
    std::ostringstream part;
    part << "profile q=1e7 k=3: " << child.seconds << "s, " << child.maxrss_kb / 1024
         << " MB rss" << (ok ? "" : " EXCEEDED") << "; ";
    detail += part.str();
  }

  // the tail-sweep command, run twice at different thread counts, must give
  // byte-identical outputs (timestamp aside)
  {
    const std::string config_path = (dir / "sweep.cfg").string();
    {
      std::ofstream cfg(config_path);
      cfg << "q_list = 99991\nk_list = 2\nmodes = directed\ntrials = 500\n"
          << "c_grid = 1, 1.5, 2, 3, 4, 8, 16, 20, 24\n"
          << "master_seed = " << seed << "\n";
    }
    const std::string out1 = (dir / "trials1.csv").string();
    const std::string out2 = (dir / "trials2.csv").string();
    const std::string sum1 = (dir / "summary1.json").string();
    const std::string sum2 = (dir / "summary2.json").string();
    const ChildResult first =
        run_child({cli, "sweep", "--config", config_path, "--out", out1, "--summary",
                   sum1, "--threads", "1"},
                  (dir / "sweep1.out").string());
    const ChildResult second =
        run_child({cli, "sweep", "--config", config_path, "--out", out2, "--summary",
                   sum2, "--threads", "4"},
                  (dir / "sweep2.out").string());
    const bool ran = first.exit_code == 0 && second.exit_code == 0;
    const bool trials_same = ran && files_identical(out1, out2);
    const bool summary_same = ran && files_identical_except_timestamp(sum1, sum2);
    passed = passed && ran && trials_same && summary_same;
    std::ostringstream part;
    part << "sweep x2 (threads 1 vs 4): exit " << first.exit_code << "/"
         << second.exit_code << ", trials " << (trials_same ? "identical" : "DIFFER")
         << ", summary " << (summary_same ? "identical" : "DIFFER");
    detail += part.str();
  }

  std::filesystem::remove_all(dir);
  crit.passed = passed;
  crit.detail = detail;
  crit.seconds = timer.seconds();
  return crit;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  uint64_t seed = cayley::verify::kDefaultSeed;
  unsigned threads = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--cli" && i + 1 < argc) {
      cli = argv[++i];
    } else if (arg == "--seed" && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
    } else if (arg == "--threads" && i + 1 < argc) {
      threads = static_cast<unsigned>(std::strtoul(argv[++i], nullptr, 10));
    } else {
      std::fprintf(stderr, "usage: acceptance [--cli PATH] [--seed N] [--threads N]\n");
      return 2;
    }
  }

  std::vector<Criterion> criteria;
  uint64_t counting_checked = 0;
  uint64_t counting_violations = 0;

  const auto add_from_checks = [&criteria](int number, const std::string& name,
                                           std::vector<const CheckResult*> checks,
                                           double seconds) {
    Criterion crit;
    crit.number = number;
    crit.name = name;
    crit.passed = true;
    for (const CheckResult* check : checks) {
      crit.passed = crit.passed && check->passed;
      if (!crit.detail.empty()) crit.detail += " | ";
      crit.detail += check->detail;
    }
    crit.seconds = seconds;
    criteria.push_back(crit);
    print_criterion(criteria.back());
  };

  try {
    {
      const Timer timer;
      const SuiteResult oracle = cayley::verify::oracle_suite(seed);
      const double elapsed = timer.seconds();
      counting_checked += oracle.counting_checked;
      counting_violations += oracle.counting_violations;
      add_from_checks(1, "diameter-oracle-equivalence",
                      {&find_check(oracle, "diameter-oracle-equivalence")}, elapsed);
      add_from_checks(2, "coverage-oracle-equivalence",
                      {&find_check(oracle, "coverage-oracle-equivalence")}, 0.0);
    }
    {
      const Timer timer;
      const SuiteResult events = cayley::verify::events_suite();
      add_from_checks(3, "exact-event-counts",
                      {&find_check(events, "exact-event-counts")}, timer.seconds());
    }
    {
      const Timer timer;
      const SuiteResult coprime = cayley::verify::coprime_suite();
      add_from_checks(4, "coprime-density",
                      {&find_check(coprime, "coprime-density-floor"),
                       &find_check(coprime, "coprime-density-limit"),
                       &find_check(coprime, "independent-family-floor")},
                      timer.seconds());
    }
    {
      const Timer timer;
      const SuiteResult links = cayley::verify::coverage_links_suite(seed);
      counting_checked += links.counting_checked;
      counting_violations += links.counting_violations;
      add_from_checks(5, "coverage-diameter-links",
                      {&find_check(links, "coverage-diameter-links")}, timer.seconds());
    }
    {
      const Timer timer;
      const SuiteResult ub = cayley::verify::upper_bound_suite(seed, threads);
      counting_checked += ub.counting_checked;
      counting_violations += ub.counting_violations;
      add_from_checks(6, "tail-upper-bound",
                      {&find_check(ub, "tail-upper-bound"), &find_check(ub, "tail-monotone")},
                      timer.seconds());
    }
    {
      const Timer timer;
      const SuiteResult lb = cayley::verify::lower_bound_suite(seed, threads);
      const double elapsed = timer.seconds();
      counting_checked += lb.counting_checked;
      counting_violations += lb.counting_violations;
      add_from_checks(7, "tail-lower-bound",
                      {&find_check(lb, "tail-lower-bound"),
                       &find_check(lb, "scaled-iqr-positive")},
                      elapsed);
      add_from_checks(8, "relation-implies-large-diameter",
                      {&find_check(lb, "relation-implies-large-diameter")}, 0.0);
    }
    {
      Criterion crit;
      crit.number = 9;
      crit.name = "counting-lower-bound";
      crit.passed = counting_violations == 0 && counting_checked > 0;
      crit.detail = std::to_string(counting_checked) + " finite directed diameters, " +
                    std::to_string(counting_violations) + " below q^(1/k) - k";
      crit.seconds = 0.0;
      criteria.push_back(crit);
      print_criterion(crit);
    }
    {
      criteria.push_back(performance_and_determinism(cli, seed));
      print_criterion(criteria.back());
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance: fatal: %s\n", e.what());
    return 2;
  }

  int failed = 0;
  for (const Criterion& crit : criteria) {
    if (!crit.passed) ++failed;
  }
  std::printf("acceptance: %zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
