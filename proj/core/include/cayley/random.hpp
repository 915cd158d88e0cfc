#pragma once

#include <bit>
#include <cstdint>

namespace cayley {

/// Identifies one reproducible residue stream. The stream content is a pure
/// function of (master_seed, stream_id); trial t of a sweep uses stream_id t.
struct RandomSource {
  uint64_t master_seed = 0;
  uint64_t stream_id = 0;
};

namespace detail {

inline constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ull;
inline constexpr uint64_t kStreamTweak = 0x2545F4914F6CDD1Dull;

// splitmix64 finalizer
inline constexpr uint64_t mix64(uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

}  // namespace detail

/// splitmix64 sequence whose start state avalanche-mixes both seed fields,
/// so nearby stream ids land at unrelated points of the period.
class ResidueStream {
 public:
  explicit ResidueStream(RandomSource src) noexcept
      : state_(detail::mix64(src.master_seed + detail::kGamma) ^
               detail::mix64(src.stream_id * detail::kGamma + detail::kStreamTweak)) {}

  uint64_t next_u64() noexcept {
    state_ += detail::kGamma;
    return detail::mix64(state_);
  }

  /// Uniform residue in [0, q) by masked rejection; no modulo bias.
  uint32_t next_residue(uint32_t q) noexcept {
    const uint64_t mask = std::bit_ceil(static_cast<uint64_t>(q)) - 1;
    for (;;) {
      const uint64_t v = next_u64() & mask;
      if (v < q) return static_cast<uint32_t>(v);
    }
  }

 private:
  uint64_t state_;
};

}  // namespace cayley
