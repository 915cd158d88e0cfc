#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cayley {

/// Largest supported modulus. Residues and distances then fit in 32 bits
/// and a per-vertex array at the cap stays within practical memory.
inline constexpr uint64_t kMaxModulus = uint64_t{1} << 31;

/// The cyclic group Z_q together with the primality of q.
struct GroupSpec {
  uint32_t q = 2;
  bool is_prime = true;

  /// Validates 2 <= q <= 2^31 and computes the primality flag.
  static GroupSpec make(uint64_t q);
};

enum class StepMode { Directed, Symmetric };

std::string_view to_string(StepMode mode);
std::optional<StepMode> step_mode_from_string(std::string_view text);

/// An ordered list of k sampled residues. Duplicates and 0 are allowed:
/// the sampling model is i.i.d. uniform over [0, q).
struct GeneratorSet {
  std::vector<uint32_t> gens;
  StepMode mode = StepMode::Directed;

  uint32_t k() const { return static_cast<uint32_t>(gens.size()); }

  /// Distinct nonzero step residues: {g} in Directed mode, {g, q-g} in
  /// Symmetric mode. Zero steps are self-loops and are dropped.
  std::vector<uint32_t> step_set(uint32_t q) const;
};

/// Validating constructor: every residue must lie in [0, q) and k >= 1.
GeneratorSet make_generator_set(const GroupSpec& group, std::vector<uint32_t> gens,
                                StepMode mode);

std::string format_gens(const std::vector<uint32_t>& gens, char sep = '+');

/// Parses "1,2,3" (or any single-char separator). Throws Error on junk.
std::vector<uint32_t> parse_gens(std::string_view text, char sep = ',');

}  // namespace cayley
