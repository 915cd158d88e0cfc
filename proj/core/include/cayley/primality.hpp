#pragma once

#include <cstdint>

namespace cayley {

/// Deterministic Miller-Rabin, exact for every n < 2^64.
bool is_prime(uint64_t n);

/// Smallest prime p >= n. Throws CapacityError if p would exceed the
/// 2^31 modulus cap.
uint32_t next_prime(uint64_t n);

}  // namespace cayley
