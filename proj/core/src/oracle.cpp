#include "cayley/oracle.hpp"

#include <queue>

#include "cayley/errors.hpp"

namespace cayley::oracle {

namespace {

bool naive_is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

uint64_t naive_pow_checked(uint64_t base, uint32_t exp, uint64_t cap, const char* what) {
  uint64_t r = 1;
  for (uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) {
      throw CapacityError(std::string(what) + ": enumeration of " + std::to_string(base) +
                          "^" + std::to_string(exp) + " items exceeds the cap of " +
                          std::to_string(cap));
    }
    r *= base;
  }
  return r;
}

}  // namespace

DistanceProfile oracle_diameter(const GroupSpec& group, const GeneratorSet& gens) {
  const uint32_t q = group.q;
  if (q > kMaxVertices) {
    throw CapacityError("oracle_diameter supports q <= " + std::to_string(kMaxVertices) +
                        ", got " + std::to_string(q));
  }
  if (gens.gens.empty()) throw Error("generator set is empty");

  std::vector<std::vector<uint32_t>> adjacency(q);
  for (uint32_t v = 0; v < q; ++v) {
    for (uint32_t g : gens.gens) {
      adjacency[v].push_back((v + g) % q);
      if (gens.mode == StepMode::Symmetric) {
        adjacency[v].push_back((v + q - g % q) % q);
      }
    }
  }

  std::vector<uint32_t> dist(q, kUnreachableDistance);
  dist[0] = 0;
  std::queue<uint32_t> bfs;
  bfs.push(0);
  while (!bfs.empty()) {
    const uint32_t v = bfs.front();
    bfs.pop();
    for (uint32_t w : adjacency[v]) {
      if (dist[w] == kUnreachableDistance) {
        dist[w] = dist[v] + 1;
        bfs.push(w);
      }
    }
  }

  DistanceProfile profile;
  profile.q = q;
  profile.eccentricity = 0;
  profile.reachable_count = 0;
  for (uint32_t v = 0; v < q; ++v) {
    if (dist[v] != kUnreachableDistance) {
      profile.reachable_count += 1;
      if (dist[v] > profile.eccentricity) profile.eccentricity = dist[v];
    }
  }
  profile.ball_sizes.assign(profile.eccentricity + 1, 0);
  for (uint32_t v = 0; v < q; ++v) {
    if (dist[v] != kUnreachableDistance) profile.ball_sizes[dist[v]] += 1;
  }
  for (uint32_t r = 1; r <= profile.eccentricity; ++r) {
    profile.ball_sizes[r] += profile.ball_sizes[r - 1];
  }
  profile.distances = std::move(dist);
  return profile;
}

CoverageReport oracle_coverage(const GroupSpec& group, const GeneratorSet& gens,
                               uint32_t bound) {
  const uint32_t q = group.q;
  if (gens.gens.empty()) throw Error("generator set is empty");
  const uint32_t k = gens.k();
  const uint64_t exponents_per_coordinate =
      gens.mode == StepMode::Symmetric ? 2 * uint64_t{bound} + 1 : uint64_t{bound} + 1;
  naive_pow_checked(exponents_per_coordinate, k, kMaxVectors, "oracle_coverage");

  std::vector<char> covered(q, 0);
  std::vector<int64_t> exponent(k, gens.mode == StepMode::Symmetric
                                       ? -static_cast<int64_t>(bound)
                                       : 0);
  const int64_t lo = gens.mode == StepMode::Symmetric ? -static_cast<int64_t>(bound) : 0;
  const int64_t hi = static_cast<int64_t>(bound);
  for (;;) {
    int64_t sum = 0;
    for (uint32_t i = 0; i < k; ++i) {
      sum += exponent[i] * static_cast<int64_t>(gens.gens[i] % q);
    }
    sum %= static_cast<int64_t>(q);
    if (sum < 0) sum += q;
    covered[static_cast<uint32_t>(sum)] = 1;

    uint32_t pos = k;
    while (pos > 0) {
      --pos;
      if (exponent[pos] < hi) {
        exponent[pos] += 1;
        break;
      }
      exponent[pos] = lo;
      if (pos == 0) {
        pos = UINT32_MAX;  // odometer wrapped: done
        break;
      }
    }
    if (pos == UINT32_MAX) break;
  }

  CoverageReport report;
  report.q = q;
  report.bound = bound;
  report.mode = gens.mode;
  report.covered = Bitmap(q);
  report.covered_count = 0;
  for (uint32_t x = 0; x < q; ++x) {
    if (covered[x]) {
      report.covered.set(x);
      report.covered_count += 1;
    }
  }
  report.full = report.covered_count == q;
  return report;
}

EventStatistics event_statistics(uint32_t q, uint32_t k,
                                 const std::vector<uint32_t>& i_vec,
                                 const std::vector<uint32_t>& j_vec, uint32_t x) {
  if (!naive_is_prime(q)) {
    throw Error("event_statistics requires a prime modulus, got " + std::to_string(q));
  }
  if (i_vec.size() != k || j_vec.size() != k) {
    throw Error("index vectors must have length k");
  }
  if (x >= q) throw Error("target residue must lie in [0, q)");
  naive_pow_checked(q, k, kMaxTuples, "event_statistics");

  bool i_nonzero = false;
  for (uint32_t c : i_vec) i_nonzero = i_nonzero || (c % q != 0);
  if (!i_nonzero) throw Error("i_vec must be nonzero mod q");

  EventStatistics stats;
  stats.q = q;
  stats.k = k;
  stats.x = x;
  stats.i_vec = i_vec;
  stats.j_vec = j_vec;

  // Classification: Equal if the vectors agree mod q, Dependent if one is a
  // scalar multiple of the other, otherwise Independent.
  {
    bool equal = true;
    for (uint32_t c = 0; c < k; ++c) {
      if (i_vec[c] % q != j_vec[c] % q) equal = false;
    }
    if (equal) {
      stats.classification = PairClass::Equal;
    } else {
      uint32_t pivot = k;
      for (uint32_t c = 0; c < k; ++c) {
        if (i_vec[c] % q != 0) {
          pivot = c;
          break;
        }
      }
      // lambda = j[pivot] / i[pivot] via Fermat inverse
      uint64_t inv = 1;
      {
        uint64_t b = i_vec[pivot] % q;
        uint64_t e = q - 2;
        uint64_t acc = 1;
        while (e > 0) {
          if (e & 1) acc = acc * b % q;
          b = b * b % q;
          e >>= 1;
        }
        inv = acc;
      }
      const uint64_t lambda = (j_vec[pivot] % q) * inv % q;
      bool proportional = true;
      for (uint32_t c = 0; c < k; ++c) {
        if (j_vec[c] % q != lambda * (i_vec[c] % q) % q) proportional = false;
      }
      stats.classification =
          proportional ? PairClass::Dependent : PairClass::Independent;
    }
  }

  // Exhaustive enumeration of every generator tuple.
  std::vector<uint32_t> tuple(k, 0);
  for (;;) {
    uint64_t dot_i = 0;
    uint64_t dot_j = 0;
    for (uint32_t c = 0; c < k; ++c) {
      dot_i += uint64_t{i_vec[c] % q} * tuple[c] % q;
      dot_j += uint64_t{j_vec[c] % q} * tuple[c] % q;
    }
    if (dot_i % q == x) {
      stats.count_i += 1;
      if (dot_j % q == x) stats.count_joint += 1;
    }

    uint32_t pos = k;
    while (pos > 0) {
      --pos;
      if (tuple[pos] + 1 < q) {
        tuple[pos] += 1;
        break;
      }
      tuple[pos] = 0;
      if (pos == 0) {
        pos = UINT32_MAX;
        break;
      }
    }
    if (pos == UINT32_MAX) break;
  }
  return stats;
}

}  // namespace cayley::oracle
