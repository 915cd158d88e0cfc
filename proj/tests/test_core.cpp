#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "cayley/errors.hpp"
#include "cayley/group.hpp"
#include "cayley/modular.hpp"
#include "cayley/primality.hpp"
#include "cayley/random.hpp"
#include "cayley/sampling.hpp"

using namespace cayley;

namespace {

// independent reference for small n
bool trial_division_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("is_prime matches trial division below 20000") {
  for (uint64_t n = 0; n < 20000; ++n) {
    CAPTURE(n);
    REQUIRE(is_prime(n) == trial_division_prime(n));
  }
}

TEST_CASE("is_prime on known large values") {
  CHECK(is_prime(2));
  CHECK(is_prime(99991));
  CHECK_FALSE(is_prime(100001));  // 11 * 9091
  CHECK_FALSE(is_prime(561));     // Carmichael
  CHECK_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2,3,5,7
  CHECK(is_prime(2147483647ull));        // 2^31 - 1
  CHECK(is_prime((uint64_t{1} << 61) - 1));
  CHECK_FALSE(is_prime(UINT64_MAX));  // 3 * 5 * 17 * 257 * 641 * 65537 * 6700417
  CHECK(is_prime(18446744073709551557ull));  // largest 64-bit prime
}

TEST_CASE("next_prime") {
  CHECK(next_prime(2) == 2);
  CHECK(next_prime(10) == 11);
  CHECK(next_prime(100000) == 100003);
  CHECK(trial_division_prime(next_prime(100000)));
  CHECK(next_prime(2147483646) == 2147483647);
  CHECK_THROWS_AS(next_prime(uint64_t{2147483648u}), CapacityError);
}

TEST_CASE("modular helpers use widened intermediates") {
  const uint64_t q = 2147483647ull;  // prime near the cap
  CHECK(mul_mod(q - 1, q - 1, q) == 1);
  CHECK(pow_mod(2, q - 1, q) == 1);  // Fermat
  CHECK(add_mod(q - 1, 5, q) == 4);
  CHECK(sub_mod(3, 5, q) == q - 2);
}

TEST_CASE("GroupSpec::make validates and flags primality") {
  CHECK(GroupSpec::make(7).is_prime);
  CHECK_FALSE(GroupSpec::make(12).is_prime);
  CHECK(GroupSpec::make(uint64_t{1} << 31).q == 2147483648u);
  CHECK_THROWS_AS(GroupSpec::make(1), Error);
  CHECK_THROWS_AS(GroupSpec::make((uint64_t{1} << 31) + 1), CapacityError);
}

TEST_CASE("step_set folds mode and drops self-loops") {
  const GeneratorSet directed{{1, 11, 11, 0}, StepMode::Directed};
  CHECK(directed.step_set(101) == std::vector<uint32_t>{1, 11});
  const GeneratorSet symmetric{{1, 11}, StepMode::Symmetric};
  CHECK(symmetric.step_set(101) == std::vector<uint32_t>{1, 11, 90, 100});
  const GeneratorSet zero{{0, 0}, StepMode::Symmetric};
  CHECK(zero.step_set(101).empty());
}

TEST_CASE("generator parsing and formatting") {
  CHECK(parse_gens("1,2,3") == std::vector<uint32_t>{1, 2, 3});
  CHECK(format_gens({1, 2, 3}) == "1+2+3");
  CHECK(format_gens({5}, ',') == "5");
  CHECK_THROWS_AS(parse_gens("1,,3"), Error);
  CHECK_THROWS_AS(parse_gens("1,x"), Error);
  CHECK_THROWS_AS(parse_gens(""), Error);
  CHECK_THROWS_AS(make_generator_set(GroupSpec::make(7), {7}, StepMode::Directed), Error);
}

TEST_CASE("streams replay exactly and differ across ids") {
  ResidueStream a(RandomSource{7, 0});
  ResidueStream b(RandomSource{7, 0});
  for (int i = 0; i < 100; ++i) REQUIRE(a.next_u64() == b.next_u64());

  ResidueStream c(RandomSource{7, 1});
  bool any_different = false;
  ResidueStream a2(RandomSource{7, 0});
  for (int i = 0; i < 100; ++i) any_different |= a2.next_u64() != c.next_u64();
  CHECK(any_different);
}

TEST_CASE("residues stay in range") {
  ResidueStream stream(RandomSource{42, 9});
  for (int i = 0; i < 10000; ++i) {
    const uint32_t r = stream.next_residue(7);
    REQUIRE(r < 7);
  }
}

TEST_CASE("sampling is uniform: frequencies and chi-square at q=5") {
  // 100000 single-draw streams; criterion: each frequency within 0.2 +- 0.01
  // and chi-square below the 99% quantile of chi2(4).
  constexpr int kDraws = 100000;
  int counts[5] = {0, 0, 0, 0, 0};
  const GroupSpec group = GroupSpec::make(5);
  for (uint64_t t = 0; t < kDraws; ++t) {
    const GeneratorSet gens =
        sample_generators(group, 1, StepMode::Directed, RandomSource{1729, t});
    counts[gens.gens[0]] += 1;
  }
  const double expected = kDraws / 5.0;
  double chi2 = 0.0;
  for (int c : counts) {
    CHECK(std::abs(c / static_cast<double>(kDraws) - 0.2) < 0.01);
    chi2 += (c - expected) * (c - expected) / expected;
  }
  CHECK(chi2 < 13.2767);  // chi2_{0.99, df=4}
}

TEST_CASE("sampler support is the full box [0,q)^k") {
  const GroupSpec group = GroupSpec::make(3);
  std::set<std::pair<uint32_t, uint32_t>> seen;
  for (uint64_t t = 0; t < 2000 && seen.size() < 9; ++t) {
    const GeneratorSet gens =
        sample_generators(group, 2, StepMode::Directed, RandomSource{1729, t});
    seen.emplace(gens.gens[0], gens.gens[1]);
  }
  CHECK(seen.size() == 9);
}

TEST_CASE("sample options: nonzero and distinct") {
  const GroupSpec group = GroupSpec::make(5);
  for (uint64_t t = 0; t < 200; ++t) {
    const GeneratorSet nz = sample_generators(group, 3, StepMode::Directed,
                                              RandomSource{5, t}, {.nonzero = true});
    for (uint32_t g : nz.gens) REQUIRE(g != 0);

    const GeneratorSet di = sample_generators(group, 4, StepMode::Directed,
                                              RandomSource{5, t}, {.distinct = true});
    auto sorted = di.gens;
    std::sort(sorted.begin(), sorted.end());
    REQUIRE(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  }
  CHECK_THROWS_AS(sample_generators(group, 5, StepMode::Directed, RandomSource{0, 0},
                                    {.nonzero = true, .distinct = true}),
                  Error);
}

TEST_CASE("sample_generators replays byte-for-byte") {
  const GroupSpec group = GroupSpec::make(99991);
  const auto a = sample_generators(group, 4, StepMode::Symmetric, RandomSource{11, 3});
  const auto b = sample_generators(group, 4, StepMode::Symmetric, RandomSource{11, 3});
  CHECK(a.gens == b.gens);
  CHECK(a.mode == b.mode);
}
