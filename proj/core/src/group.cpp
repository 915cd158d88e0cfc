#include "cayley/group.hpp"

#include <algorithm>
#include <charconv>

#include "cayley/errors.hpp"
#include "cayley/primality.hpp"

namespace cayley {

GroupSpec GroupSpec::make(uint64_t q) {
  if (q < 2) throw Error("modulus must be at least 2, got " + std::to_string(q));
  if (q > kMaxModulus) {
    throw CapacityError("modulus " + std::to_string(q) + " exceeds the 2^31 cap");
  }
  return GroupSpec{static_cast<uint32_t>(q), cayley::is_prime(q)};
}

std::string_view to_string(StepMode mode) {
  return mode == StepMode::Directed ? "directed" : "symmetric";
}

std::optional<StepMode> step_mode_from_string(std::string_view text) {
  if (text == "directed") return StepMode::Directed;
  if (text == "symmetric") return StepMode::Symmetric;
  return std::nullopt;
}

std::vector<uint32_t> GeneratorSet::step_set(uint32_t q) const {
  std::vector<uint32_t> steps;
  steps.reserve(gens.size() * 2);
  for (uint32_t g : gens) {
    const uint32_t r = g % q;
    if (r == 0) continue;  // self-loop
    steps.push_back(r);
    if (mode == StepMode::Symmetric) steps.push_back(q - r);
  }
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
  return steps;
}

GeneratorSet make_generator_set(const GroupSpec& group, std::vector<uint32_t> gens,
                                StepMode mode) {
  if (gens.empty()) throw Error("generator set must contain at least one residue");
  for (uint32_t g : gens) {
    if (g >= group.q) {
      throw Error("generator " + std::to_string(g) + " is not a residue mod " +
                  std::to_string(group.q));
    }
  }
  return GeneratorSet{std::move(gens), mode};
}

std::string format_gens(const std::vector<uint32_t>& gens, char sep) {
  std::string out;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i > 0) out.push_back(sep);
    out += std::to_string(gens[i]);
  }
  return out;
}

std::vector<uint32_t> parse_gens(std::string_view text, char sep) {
  std::vector<uint32_t> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find(sep, pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view field = text.substr(pos, end - pos);
    uint64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
      throw Error("cannot parse residue list near '" + std::string(field) + "'");
    }
    if (value > kMaxModulus) {
      throw CapacityError("residue " + std::to_string(value) + " exceeds the 2^31 cap");
    }
    out.push_back(static_cast<uint32_t>(value));
    pos = end + 1;
    if (end == text.size()) break;
  }
  if (out.empty()) throw Error("empty residue list");
  return out;
}

}  // namespace cayley
