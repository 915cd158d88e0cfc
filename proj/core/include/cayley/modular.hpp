#pragma once

#include <cstdint>

namespace cayley {

inline uint64_t add_mod(uint64_t a, uint64_t b, uint64_t m) {
  a %= m;
  b %= m;
  uint64_t s = a + b;  // no overflow for m < 2^63
  return s >= m ? s - m : s;
}

inline uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t m) {
  a %= m;
  b %= m;
  return a >= b ? a - b : a + m - b;
}

// Widened intermediate so the product is exact for any m < 2^64.
inline uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) {
  if (m == 1) return 0;
  uint64_t acc = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) acc = mul_mod(acc, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return acc;
}

}  // namespace cayley
