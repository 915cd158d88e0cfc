#include "cayley/sampling.hpp"

#include <algorithm>

#include "cayley/errors.hpp"

namespace cayley {

GeneratorSet sample_generators(const GroupSpec& group, uint32_t k, StepMode mode,
                               RandomSource src, SampleOptions opts) {
  if (k == 0) throw Error("k must be at least 1");
  const uint32_t distinct_pool = opts.nonzero ? group.q - 1 : group.q;
  if (opts.distinct && k > distinct_pool) {
    throw Error("cannot draw " + std::to_string(k) + " distinct residues from a pool of " +
                std::to_string(distinct_pool));
  }

  ResidueStream stream(src);
  std::vector<uint32_t> gens;
  gens.reserve(k);
  while (gens.size() < k) {
    const uint32_t r = stream.next_residue(group.q);
    if (opts.nonzero && r == 0) continue;
    if (opts.distinct && std::find(gens.begin(), gens.end(), r) != gens.end()) continue;
    gens.push_back(r);
  }
  return GeneratorSet{std::move(gens), mode};
}

}  // namespace cayley
