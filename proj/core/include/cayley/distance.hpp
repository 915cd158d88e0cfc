#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cayley/group.hpp"

namespace cayley {

/// Sentinel for vertices with no directed path from 0. Valid distances are
/// strictly below the modulus cap, so the sentinel cannot collide.
inline constexpr uint32_t kUnreachableDistance = 0xFFFFFFFFu;

/// Word-metric distances from vertex 0. By vertex-transitivity the
/// eccentricity of 0 equals the diameter whenever the graph is strongly
/// connected; otherwise the diameter is reported as absent.
struct DistanceProfile {
  uint32_t q = 0;
  std::vector<uint32_t> distances;   // kUnreachableDistance where no path exists
  uint32_t eccentricity = 0;         // max finite distance
  uint32_t reachable_count = 0;
  std::vector<uint32_t> ball_sizes;  // |B_0|, |B_1|, ..., |B_eccentricity|

  bool fully_reachable() const { return reachable_count == q; }
  std::optional<uint32_t> diameter() const {
    if (!fully_reachable()) return std::nullopt;
    return eccentricity;
  }
};

enum class BfsStrategy {
  Auto,           // FrontierQueue, except BitsetSweep for q > 2^24 and few steps
  FrontierQueue,  // flat vector frontier, one relaxation per edge
  BitsetSweep,    // per-level rotate-and-or over whole-graph bitmaps
};

/// Exact BFS from 0 under steps {+g} (Directed) or {+g, -g} (Symmetric).
/// Both strategies produce bit-identical profiles.
DistanceProfile distance_profile(const GroupSpec& group, const GeneratorSet& gens,
                                 BfsStrategy strategy = BfsStrategy::Auto);

}  // namespace cayley
