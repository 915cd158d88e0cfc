#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cayley/bitmap.hpp"
#include "cayley/group.hpp"

namespace cayley {

/// Guard for the shift-union and convolution passes, counted as
/// (number of step directions) * bound * q bit-steps.
inline constexpr uint64_t kDefaultShiftBudget = 100'000'000'000ull;

/// Guard for the meet-in-the-middle join, counted in table entries
/// (bound+1)^(ceil(k/2)).
inline constexpr uint64_t kDefaultJoinBudget = 20'000'000ull;

/// The set T_L of residues expressible with every exponent at most L
/// (Directed: exponents in {0..L}; Symmetric: {-L..L}).
struct CoverageReport {
  uint32_t q = 0;
  uint32_t bound = 0;  // L
  StepMode mode = StepMode::Directed;
  Bitmap covered;               // membership bitmap for T_L
  uint32_t covered_count = 0;   // B_L = |T_L|
  bool full = false;            // A_L: every residue covered
};

CoverageReport coverage_report(const GroupSpec& group, const GeneratorSet& gens,
                               uint32_t bound, uint64_t work_budget = kDefaultShiftBudget);

/// counts[x] = number of exponent vectors in {0..L}^k whose combination
/// hits x. Directed mode only; the total is exactly (L+1)^k.
struct HitCountTable {
  uint32_t q = 0;
  uint32_t bound = 0;
  std::vector<uint64_t> counts;
};

HitCountTable hit_counts(const GroupSpec& group, const GeneratorSet& gens,
                         uint32_t bound, uint64_t work_budget = kDefaultShiftBudget);

/// A nonzero exponent vector in {0..L}^k whose combination is 0 mod q;
/// always the lexicographically smallest one.
struct RelationWitness {
  std::vector<uint32_t> exponents;
};

/// Meet-in-the-middle search over a coordinate split. Agrees with direct
/// enumeration; absent when no nonzero vector in the box hits 0.
std::optional<RelationWitness> find_zero_relation(const GroupSpec& group,
                                                  const GeneratorSet& gens, uint32_t bound,
                                                  uint64_t table_budget = kDefaultJoinBudget);

/// #{(i, j) in {1..limit}^2 : gcd(i, j) = 1}, exact.
uint64_t coprime_pair_count(uint32_t limit);

/// All counts for 1..limit in one incremental pass.
std::vector<uint64_t> coprime_pair_counts(uint32_t limit);

/// coprime_pair_count(limit) / limit^2 as a double.
double coprime_fraction(uint32_t limit);

/// Size of the pairwise-linearly-independent vector family built from
/// coprime leading coordinate pairs: coprime_pair_count(limit) * (limit+1)^(k-2).
/// Requires k >= 2; throws Error on overflow.
uint64_t independent_family_count(uint32_t limit, uint32_t k);

}  // namespace cayley
