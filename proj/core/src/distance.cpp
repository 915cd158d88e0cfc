#include "cayley/distance.hpp"

#include <utility>

#include "cayley/bitmap.hpp"
#include "cayley/errors.hpp"

namespace cayley {

namespace {

constexpr uint32_t kBitsetThreshold = 1u << 24;
constexpr size_t kBitsetMaxSteps = 8;

struct BfsState {
  std::vector<uint32_t> distances;
  std::vector<uint32_t> ball_sizes;
  uint32_t eccentricity = 0;
  uint32_t reachable = 1;
};

BfsState frontier_queue_bfs(uint32_t q, const std::vector<uint32_t>& steps) {
  BfsState st;
  st.distances.assign(q, kUnreachableDistance);
  st.distances[0] = 0;
  st.ball_sizes = {1};

  std::vector<uint32_t> frontier{0};
  std::vector<uint32_t> next;
  uint32_t level = 0;
  while (!frontier.empty()) {
    next.clear();
    for (uint32_t v : frontier) {
      for (uint32_t s : steps) {
        uint32_t w = v + s;
        if (w >= q) w -= q;
        if (st.distances[w] == kUnreachableDistance) {
          st.distances[w] = level + 1;
          next.push_back(w);
        }
      }
    }
    if (next.empty()) break;
    ++level;
    st.eccentricity = level;
    st.reachable += static_cast<uint32_t>(next.size());
    st.ball_sizes.push_back(st.reachable);
    frontier.swap(next);
  }
  return st;
}

BfsState bitset_sweep_bfs(uint32_t q, const std::vector<uint32_t>& steps) {
  BfsState st;
  st.distances.assign(q, kUnreachableDistance);
  st.distances[0] = 0;
  st.ball_sizes = {1};

  Bitmap visited(q), frontier(q), next(q), shifted(q);
  visited.set(0);
  frontier.set(0);
  uint32_t level = 0;
  for (;;) {
    next.clear();
    for (uint32_t s : steps) {
      frontier.rotate_into(s, shifted);
      next.or_with(shifted);
    }
    next.and_not(visited);
    if (next.none()) break;
    ++level;
    next.for_each_set([&](uint32_t v) { st.distances[v] = level; });
    st.reachable += next.count();
    st.eccentricity = level;
    st.ball_sizes.push_back(st.reachable);
    visited.or_with(next);
    frontier = next;
  }
  return st;
}

}  // namespace

DistanceProfile distance_profile(const GroupSpec& group, const GeneratorSet& gens,
                                 BfsStrategy strategy) {
  const uint32_t q = group.q;
  for (uint32_t g : gens.gens) {
    if (g >= q) {
      throw Error("generator " + std::to_string(g) + " is not a residue mod " +
                  std::to_string(q));
    }
  }
  if (gens.gens.empty()) throw Error("generator set is empty");

  const std::vector<uint32_t> steps = gens.step_set(q);

  BfsState st;
  if (steps.empty()) {
    // Every generator is 0 mod q: only the origin is reachable.
    st.distances.assign(q, kUnreachableDistance);
    st.distances[0] = 0;
    st.ball_sizes = {1};
  } else {
    const bool use_bitset =
        strategy == BfsStrategy::BitsetSweep ||
        (strategy == BfsStrategy::Auto && q > kBitsetThreshold &&
         steps.size() <= kBitsetMaxSteps);
    st = use_bitset ? bitset_sweep_bfs(q, steps) : frontier_queue_bfs(q, steps);
  }

  DistanceProfile profile;
  profile.q = q;
  profile.distances = std::move(st.distances);
  profile.eccentricity = st.eccentricity;
  profile.reachable_count = st.reachable;
  profile.ball_sizes = std::move(st.ball_sizes);
  return profile;
}

}  // namespace cayley
