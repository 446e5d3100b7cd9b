#include <benchmark/benchmark.h>

#include "mcdeform/matrix.hpp"
#include "test_support.hpp"

using namespace mcdeform;
using namespace mcdeform::testing;

static void BM_KernelBasis(benchmark::State& state) {
  Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  // Rank-deficient: the last quarter of the columns repeat earlier ones.
  QMatrix m = random_matrix(rng, n, n, 40);
  for (std::size_t c = 3 * n / 4; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) m(r, c) = m(r, c - n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KernelBasis)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_Inverse(benchmark::State& state) {
  Rng rng(2);
  QMatrix m = random_invertible(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(inverse(m));
}
BENCHMARK(BM_Inverse)->RangeMultiplier(2)->Range(4, 32);

static void BM_HomologyOfEnd(benchmark::State& state) {
  const ChainComplex a = window_complex(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(homology_dim(end_complex(a), 1));
}
BENCHMARK(BM_HomologyOfEnd)->DenseRange(1, 4);
