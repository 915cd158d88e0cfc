#pragma once

#include <cstdint>

#include "cayley/group.hpp"
#include "cayley/random.hpp"

namespace cayley {

/// Both flags default off: the base model is i.i.d. uniform over [0, q),
/// zeros and collisions included. The flags exist for exploration only.
struct SampleOptions {
  bool nonzero = false;
  bool distinct = false;
};

/// k i.i.d. uniform residues from the given stream. Identical inputs
/// reproduce identical output.
GeneratorSet sample_generators(const GroupSpec& group, uint32_t k, StepMode mode,
                               RandomSource src, SampleOptions opts = {});

}  // namespace cayley
