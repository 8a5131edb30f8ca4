#include <benchmark/benchmark.h>

#include "superlef/normed_algebra.hpp"
#include "superlef/rng.hpp"

namespace {

using namespace superlef;

void BM_OctonionMul(benchmark::State& state) {
  SeededRng rng(1);
  std::vector<Rat> ca, cb;
  for (int k = 0; k < 8; ++k) {
    ca.push_back(rng.nextRat(9, 5));
    cb.push_back(rng.nextRat(9, 5));
  }
  const NormedElement a = NormedElement::fromCoords(Algebra::O, ca);
  const NormedElement b = NormedElement::fromCoords(Algebra::O, cb);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul(a, b));
  }
}
BENCHMARK(BM_OctonionMul);

void BM_SampleUnit(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sampleUnit(Algebra::O, seed++));
  }
}
BENCHMARK(BM_SampleUnit);

}  // namespace

BENCHMARK_MAIN();
