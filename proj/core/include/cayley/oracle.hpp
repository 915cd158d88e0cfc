#pragma once

#include <cstdint>
#include <vector>

#include "cayley/coverage.hpp"
#include "cayley/distance.hpp"
#include "cayley/group.hpp"

namespace cayley::oracle {

// Deliberately naive reference implementations, used as ground truth in
// differential tests. They share no algorithmic code with the fast paths.

inline constexpr uint32_t kMaxVertices = 10'000;   // oracle_diameter
inline constexpr uint64_t kMaxVectors = 10'000'000;  // oracle_coverage
inline constexpr uint64_t kMaxTuples = 10'000'000;   // event_statistics

/// Explicit adjacency list plus a textbook queue BFS.
DistanceProfile oracle_diameter(const GroupSpec& group, const GeneratorSet& gens);

/// Enumerates every exponent vector in the box explicitly.
CoverageReport oracle_coverage(const GroupSpec& group, const GeneratorSet& gens,
                               uint32_t bound);

enum class PairClass { Independent, Dependent, Equal };

/// Exhaustive counts over all q^k generator tuples for the events
/// "i.g = x" and "i.g = x and j.g = x".
struct EventStatistics {
  uint32_t q = 0;
  uint32_t k = 0;
  uint32_t x = 0;
  std::vector<uint32_t> i_vec;
  std::vector<uint32_t> j_vec;
  uint64_t count_i = 0;      // tuples with i.g = x
  uint64_t count_joint = 0;  // tuples satisfying both equations
  PairClass classification = PairClass::Independent;
};

/// Requires q prime (checked by trial division here) and q^k within the
/// tuple cap; i_vec must not be the zero vector mod q.
EventStatistics event_statistics(uint32_t q, uint32_t k,
                                 const std::vector<uint32_t>& i_vec,
                                 const std::vector<uint32_t>& j_vec, uint32_t x);

}  // namespace cayley::oracle
