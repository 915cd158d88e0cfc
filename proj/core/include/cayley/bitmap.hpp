#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace cayley {

/// Fixed-width bit array over [0, n) with a circular shift, the primitive
/// behind sumset coverage and the frontier-sweep BFS. Bits above n in the
/// last word are kept zero.
class Bitmap {
 public:
  Bitmap() = default;
  explicit Bitmap(uint32_t bit_count)
      : nbits_(bit_count), words_((bit_count + 63) / 64, 0) {}

  uint32_t size() const { return nbits_; }

  bool test(uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(uint32_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }

  void clear();
  uint32_t count() const;
  bool none() const;
  bool all() const { return count() == nbits_; }

  void or_with(const Bitmap& other);
  void and_not(const Bitmap& other);  // this &= ~other
  bool is_subset_of(const Bitmap& other) const;
  bool operator==(const Bitmap& other) const = default;

  /// out receives this bitmap rotated upward by `shift`: bit b maps to
  /// (b + shift) mod size. Requires 0 <= shift < size and matching sizes.
  void rotate_into(uint32_t shift, Bitmap& out) const;

  void swap(Bitmap& other) noexcept {
    std::swap(nbits_, other.nbits_);
    words_.swap(other.words_);
  }

  template <typename Fn>
  void for_each_set(Fn&& fn) const {
    for (uint32_t w = 0; w < words_.size(); ++w) {
      uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        fn(static_cast<uint32_t>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  const std::vector<uint64_t>& words() const { return words_; }

 private:
  uint32_t nbits_ = 0;
  std::vector<uint64_t> words_;

  void mask_tail();
};

}  // namespace cayley
