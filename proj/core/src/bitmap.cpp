#include "cayley/bitmap.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>

namespace cayley {

void Bitmap::clear() { std::fill(words_.begin(), words_.end(), 0); }

uint32_t Bitmap::count() const {
  uint32_t total = 0;
  for (uint64_t w : words_) total += static_cast<uint32_t>(std::popcount(w));
  return total;
}

bool Bitmap::none() const {
  for (uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

void Bitmap::or_with(const Bitmap& other) {
  assert(nbits_ == other.nbits_);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
}

void Bitmap::and_not(const Bitmap& other) {
  assert(nbits_ == other.nbits_);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
}

bool Bitmap::is_subset_of(const Bitmap& other) const {
  assert(nbits_ == other.nbits_);
  for (size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

void Bitmap::mask_tail() {
  const uint32_t rem = nbits_ & 63;
  if (rem != 0 && !words_.empty()) words_.back() &= (uint64_t{1} << rem) - 1;
}

namespace {

// dst |= src << shift, in an nbits-wide window (overflowing bits drop).
void or_shifted_left(const std::vector<uint64_t>& src, uint32_t shift,
                     std::vector<uint64_t>& dst) {
  const size_t nwords = src.size();
  const uint32_t ws = shift >> 6;
  const uint32_t bs = shift & 63;
  if (bs == 0) {
    for (size_t i = nwords; i-- > ws;) dst[i] |= src[i - ws];
    return;
  }
  for (size_t i = nwords; i-- > ws;) {
    uint64_t v = src[i - ws] << bs;
    if (i - ws > 0) v |= src[i - ws - 1] >> (64 - bs);
    dst[i] |= v;
  }
}

// dst |= src >> shift.
void or_shifted_right(const std::vector<uint64_t>& src, uint32_t shift,
                      std::vector<uint64_t>& dst) {
  const size_t nwords = src.size();
  const uint32_t ws = shift >> 6;
  const uint32_t bs = shift & 63;
  if (bs == 0) {
    for (size_t i = 0; i + ws < nwords; ++i) dst[i] |= src[i + ws];
    return;
  }
  for (size_t i = 0; i + ws < nwords; ++i) {
    uint64_t v = src[i + ws] >> bs;
    if (i + ws + 1 < nwords) v |= src[i + ws + 1] << (64 - bs);
    dst[i] |= v;
  }
}

}  // namespace

void Bitmap::rotate_into(uint32_t shift, Bitmap& out) const {
  assert(&out != this);
  assert(out.nbits_ == nbits_);
  assert(shift < nbits_);
  out.clear();
  if (shift == 0) {
    out.words_ = words_;
    return;
  }
  // (x << s | x >> (n - s)) over the n-bit window
  or_shifted_left(words_, shift, out.words_);
  or_shifted_right(words_, nbits_ - shift, out.words_);
  out.mask_tail();
}

}  // namespace cayley
