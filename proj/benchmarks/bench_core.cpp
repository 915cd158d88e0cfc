#include <benchmark/benchmark.h>

#include "cayley/coverage.hpp"
#include "cayley/distance.hpp"
#include "cayley/primality.hpp"
#include "cayley/sampling.hpp"

namespace {

using namespace cayley;

void BM_DistanceQueue(benchmark::State& state) {
  const GroupSpec group = GroupSpec::make(static_cast<uint64_t>(state.range(0)));
  const uint32_t k = static_cast<uint32_t>(state.range(1));
  const GeneratorSet gens =
      sample_generators(group, k, StepMode::Directed, RandomSource{1729, 0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        distance_profile(group, gens, BfsStrategy::FrontierQueue).eccentricity);
  }
  state.SetItemsProcessed(state.iterations() * group.q);
}
BENCHMARK(BM_DistanceQueue)
    ->Args({99991, 2})
    ->Args({1000003, 2})
    ->Args({1000003, 3})
    ->Args({10000019, 3})
    ->Unit(benchmark::kMillisecond);

void BM_DistanceBitset(benchmark::State& state) {
  const GroupSpec group = GroupSpec::make(static_cast<uint64_t>(state.range(0)));
  const uint32_t k = static_cast<uint32_t>(state.range(1));
  const GeneratorSet gens =
      sample_generators(group, k, StepMode::Directed, RandomSource{1729, 0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        distance_profile(group, gens, BfsStrategy::BitsetSweep).eccentricity);
  }
  state.SetItemsProcessed(state.iterations() * group.q);
}
BENCHMARK(BM_DistanceBitset)
    ->Args({99991, 2})
    ->Args({1000003, 3})
    ->Args({10000019, 3})
    ->Unit(benchmark::kMillisecond);

void BM_Coverage(benchmark::State& state) {
  const GroupSpec group = GroupSpec::make(static_cast<uint64_t>(state.range(0)));
  const GeneratorSet gens =
      sample_generators(group, 2, StepMode::Directed, RandomSource{1729, 0});
  const uint32_t bound = static_cast<uint32_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(coverage_report(group, gens, bound).covered_count);
  }
}
BENCHMARK(BM_Coverage)
    ->Args({99991, 316})
    ->Args({99991, 632})
    ->Args({1000003, 1000})
    ->Unit(benchmark::kMillisecond);

void BM_ZeroRelation(benchmark::State& state) {
  const GroupSpec group = GroupSpec::make(99991);
  const uint32_t k = static_cast<uint32_t>(state.range(0));
  const uint32_t bound = static_cast<uint32_t>(state.range(1));
  const GeneratorSet gens =
      sample_generators(group, k, StepMode::Directed, RandomSource{1729, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_zero_relation(group, gens, bound).has_value());
  }
}
BENCHMARK(BM_ZeroRelation)->Args({2, 316})->Args({3, 46})->Args({4, 17});

void BM_IsPrime(benchmark::State& state) {
  uint64_t n = 2147483647ull;  // 2^31 - 1
  for (auto _ : state) {
    benchmark::DoNotOptimize(cayley::is_prime(n));
  }
}
BENCHMARK(BM_IsPrime);

void BM_HitCounts(benchmark::State& state) {
  const GroupSpec group = GroupSpec::make(static_cast<uint64_t>(state.range(0)));
  const GeneratorSet gens =
      sample_generators(group, 2, StepMode::Directed, RandomSource{1729, 0});
  const uint32_t bound = static_cast<uint32_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hit_counts(group, gens, bound).counts.back());
  }
}
BENCHMARK(BM_HitCounts)->Args({99991, 316})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
