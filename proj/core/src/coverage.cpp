#include "cayley/coverage.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <utility>

#include "cayley/errors.hpp"

namespace cayley {

namespace {

void validate_gens(const GroupSpec& group, const GeneratorSet& gens) {
  if (gens.gens.empty()) throw Error("generator set is empty");
  for (uint32_t g : gens.gens) {
    if (g >= group.q) {
      throw Error("generator " + std::to_string(g) + " is not a residue mod " +
                  std::to_string(group.q));
    }
  }
}

// (base)^exp, throwing BudgetError beyond `cap`.
uint64_t checked_pow(uint64_t base, uint32_t exp, uint64_t cap, const char* what) {
  uint64_t result = 1;
  for (uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && result > cap / base) {
      throw BudgetError(std::string(what) + ": table of " + std::to_string(base) + "^" +
                        std::to_string(exp) + " entries exceeds the budget of " +
                        std::to_string(cap));
    }
    result *= base;
  }
  return result;
}

}  // namespace

CoverageReport coverage_report(const GroupSpec& group, const GeneratorSet& gens,
                               uint32_t bound, uint64_t work_budget) {
  validate_gens(group, gens);
  const uint32_t q = group.q;

  const unsigned __int128 directions = gens.mode == StepMode::Symmetric ? 2 : 1;
  const unsigned __int128 work = directions * gens.gens.size() *
                                 static_cast<unsigned __int128>(bound) * q;
  if (work > work_budget) {
    throw BudgetError("coverage_report: k*L*q work (k=" + std::to_string(gens.k()) +
                      ", L=" + std::to_string(bound) + ", q=" + std::to_string(q) +
                      ") exceeds the budget of " + std::to_string(work_budget) +
                      " bit-steps");
  }

  CoverageReport report;
  report.q = q;
  report.bound = bound;
  report.mode = gens.mode;
  report.covered = Bitmap(q);
  report.covered.set(0);

  Bitmap base(q), cur(q), tmp(q);
  for (uint32_t g : gens.gens) {
    const uint32_t r = g % q;
    if (r == 0 || bound == 0) continue;
    base = report.covered;  // T before this generator
    cur = base;
    for (uint32_t i = 1; i <= bound; ++i) {
      cur.rotate_into(r, tmp);
      cur.swap(tmp);
      report.covered.or_with(cur);
    }
    if (gens.mode == StepMode::Symmetric) {
      const uint32_t rneg = q - r;
      cur = base;
      for (uint32_t i = 1; i <= bound; ++i) {
        cur.rotate_into(rneg, tmp);
        cur.swap(tmp);
        report.covered.or_with(cur);
      }
    }
  }

  report.covered_count = report.covered.count();
  report.full = report.covered_count == q;
  return report;
}

HitCountTable hit_counts(const GroupSpec& group, const GeneratorSet& gens,
                         uint32_t bound, uint64_t work_budget) {
  validate_gens(group, gens);
  if (gens.mode != StepMode::Directed) {
    throw Error("hit_counts is defined for Directed mode only");
  }
  const uint32_t q = group.q;
  const uint32_t k = gens.k();

  // Total count is (L+1)^k; it must be representable exactly.
  checked_pow(uint64_t{bound} + 1, k, uint64_t{1} << 62, "hit_counts");
  const unsigned __int128 work =
      static_cast<unsigned __int128>(k) * (uint64_t{bound} + 1) * q;
  if (work > work_budget) {
    throw BudgetError("hit_counts: k*(L+1)*q work (k=" + std::to_string(k) +
                      ", L=" + std::to_string(bound) + ", q=" + std::to_string(q) +
                      ") exceeds the budget of " + std::to_string(work_budget));
  }

  std::vector<uint64_t> counts(q, 0);
  counts[0] = 1;
  std::vector<uint64_t> next(q, 0);
  for (uint32_t g : gens.gens) {
    const uint32_t r = g % q;
    std::fill(next.begin(), next.end(), 0);
    for (uint32_t x = 0; x < q; ++x) {
      const uint64_t c = counts[x];
      if (c == 0) continue;
      uint32_t y = x;
      for (uint32_t i = 0; i <= bound; ++i) {
        next[y] += c;
        y += r;
        if (y >= q) y -= q;
      }
    }
    counts.swap(next);
  }
  return HitCountTable{q, bound, std::move(counts)};
}

namespace {

// Exponent vectors are enumerated by lexicographic rank; digit 0 is the most
// significant, so rank order equals lexicographic order.
std::vector<uint32_t> decode_rank(uint64_t rank, uint32_t digits, uint64_t radix) {
  std::vector<uint32_t> out(digits, 0);
  for (uint32_t i = digits; i-- > 0;) {
    out[i] = static_cast<uint32_t>(rank % radix);
    rank /= radix;
  }
  return out;
}

}  // namespace

std::optional<RelationWitness> find_zero_relation(const GroupSpec& group,
                                                  const GeneratorSet& gens, uint32_t bound,
                                                  uint64_t table_budget) {
  validate_gens(group, gens);
  if (bound == 0) return std::nullopt;

  const uint32_t q = group.q;
  const uint32_t k = gens.k();
  const uint64_t radix = uint64_t{bound} + 1;
  const uint32_t suffix_len = (k + 1) / 2;
  const uint32_t prefix_len = k - suffix_len;

  const uint64_t suffix_total =
      checked_pow(radix, suffix_len, table_budget, "find_zero_relation");

  // All suffix sums, keyed by residue; smallest rank first after sorting.
  std::vector<std::pair<uint32_t, uint64_t>> table;
  table.reserve(static_cast<size_t>(suffix_total - 1));
  {
    std::vector<uint32_t> digits(suffix_len, 0);
    uint64_t sum = 0;  // running sum of digit_i * gens[prefix_len + i] mod q
    for (uint64_t rank = 1; rank < suffix_total; ++rank) {
      // odometer increment over the suffix digits
      uint32_t pos = suffix_len;
      while (pos-- > 0) {
        if (digits[pos] < bound) {
          digits[pos] += 1;
          sum += gens.gens[prefix_len + pos] % q;
          if (sum >= q) sum -= q;
          break;
        }
        // digit rolls over from bound to 0
        sum = (sum + q - static_cast<uint64_t>(uint64_t{bound} *
                                               (gens.gens[prefix_len + pos] % q) % q)) %
              q;
        digits[pos] = 0;
      }
      table.emplace_back(static_cast<uint32_t>(sum), rank);
    }
  }
  std::sort(table.begin(), table.end());

  const auto lookup = [&table](uint32_t residue) -> std::optional<uint64_t> {
    auto it = std::lower_bound(table.begin(), table.end(),
                               std::make_pair(residue, uint64_t{0}));
    if (it == table.end() || it->first != residue) return std::nullopt;
    return it->second;
  };

  const uint64_t prefix_total = checked_pow(radix, prefix_len, table_budget,
                                            "find_zero_relation");
  std::vector<uint32_t> prefix(prefix_len, 0);
  uint64_t prefix_sum = 0;
  for (uint64_t rank = 0; rank < prefix_total; ++rank) {
    if (rank > 0) {
      uint32_t pos = prefix_len;
      while (pos-- > 0) {
        if (prefix[pos] < bound) {
          prefix[pos] += 1;
          prefix_sum += gens.gens[pos] % q;
          if (prefix_sum >= q) prefix_sum -= q;
          break;
        }
        prefix_sum =
            (prefix_sum + q -
             static_cast<uint64_t>(uint64_t{bound} * (gens.gens[pos] % q) % q)) %
            q;
        prefix[pos] = 0;
      }
    }
    const uint32_t needed = static_cast<uint32_t>((q - prefix_sum % q) % q);
    std::optional<uint64_t> suffix_rank;
    if (rank == 0) {
      // Zero prefix: the completion itself must be nonzero, and the table
      // omits the all-zero suffix, so a plain lookup is exactly right.
      suffix_rank = lookup(needed);
    } else if (needed == 0) {
      suffix_rank = 0;  // all-zero suffix is the lexicographic minimum
    } else {
      suffix_rank = lookup(needed);
    }
    if (suffix_rank.has_value()) {
      RelationWitness witness;
      witness.exponents = prefix;
      const std::vector<uint32_t> suffix = decode_rank(*suffix_rank, suffix_len, radix);
      witness.exponents.insert(witness.exponents.end(), suffix.begin(), suffix.end());

      uint64_t check = 0;
      bool nonzero = false;
      for (uint32_t i = 0; i < k; ++i) {
        check = (check + uint64_t{witness.exponents[i]} * (gens.gens[i] % q)) % q;
        nonzero = nonzero || witness.exponents[i] != 0;
      }
      assert(check == 0 && nonzero);
      (void)check;
      (void)nonzero;
      return witness;
    }
  }
  return std::nullopt;
}

uint64_t coprime_pair_count(uint32_t limit) {
  if (limit == 0) throw Error("coprime_pair_count requires limit >= 1");
  return coprime_pair_counts(limit).back();
}

std::vector<uint64_t> coprime_pair_counts(uint32_t limit) {
  if (limit == 0) throw Error("coprime_pair_counts requires limit >= 1");
  std::vector<uint64_t> out;
  out.reserve(limit);
  uint64_t total = 0;
  for (uint32_t n = 1; n <= limit; ++n) {
    uint64_t row = 0;  // #{j in [1,n] : gcd(j,n) = 1}
    for (uint32_t j = 1; j <= n; ++j) {
      if (std::gcd(j, n) == 1) ++row;
    }
    total += 2 * row - (n == 1 ? 1 : 0);
    out.push_back(total);
  }
  return out;
}

double coprime_fraction(uint32_t limit) {
  const uint64_t count = coprime_pair_count(limit);
  return static_cast<double>(count) /
         (static_cast<double>(limit) * static_cast<double>(limit));
}

uint64_t independent_family_count(uint32_t limit, uint32_t k) {
  if (k < 2) throw Error("independent_family_count requires k >= 2");
  if (limit == 0) throw Error("independent_family_count requires limit >= 1");
  uint64_t result = coprime_pair_count(limit);
  const uint64_t base = uint64_t{limit} + 1;
  for (uint32_t i = 2; i < k; ++i) {
    if (result > UINT64_MAX / base) {
      throw Error("independent_family_count overflows 64 bits");
    }
    result *= base;
  }
  return result;
}

}  // namespace cayley
