#include "cayley/primality.hpp"

#include <array>

#include "cayley/errors.hpp"
#include "cayley/group.hpp"
#include "cayley/modular.hpp"

namespace cayley {

namespace {

// Sufficient witness set for every n < 3.3 * 10^24, in particular all of 2^64
// (Sorenson & Webster).
constexpr std::array<uint64_t, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                 17, 19, 23, 29, 31, 37};

bool strong_probable_prime(uint64_t n, uint64_t a, uint64_t d, int s) {
  uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {uint64_t{2}, uint64_t{3}, uint64_t{5}, uint64_t{7}}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : kWitnesses) {
    if (a % n == 0) continue;
    if (!strong_probable_prime(n, a, d, s)) return false;
  }
  return true;
}

uint32_t next_prime(uint64_t n) {
  if (n <= 2) return 2;
  uint64_t candidate = n | 1;  // first odd >= n
  while (candidate <= kMaxModulus && !is_prime(candidate)) candidate += 2;
  if (candidate > kMaxModulus) {
    throw CapacityError("next_prime: no prime >= " + std::to_string(n) +
                        " within the 2^31 modulus cap");
  }
  return static_cast<uint32_t>(candidate);
}

}  // namespace cayley
