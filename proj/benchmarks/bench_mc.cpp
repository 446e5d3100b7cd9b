#include <benchmark/benchmark.h>

#include "mcdeform/deform.hpp"
#include "mcdeform/deligne.hpp"
#include "test_support.hpp"

using namespace mcdeform;
using namespace mcdeform::testing;

static void BM_GaugeAct(benchmark::State& state) {
  Rng rng(3);
  ArtinHost h(make_dual_numbers(static_cast<int>(state.range(0))), graded_fixture());
  auto z = random_mc(rng, h);
  while (!z) z = random_mc(rng, h);
  const Vec gamma = random_homogeneous(rng, h.host(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(gauge_act(h, gamma, *z));
}
BENCHMARK(BM_GaugeAct)->DenseRange(2, 5);

static void BM_Bch(benchmark::State& state) {
  Rng rng(4);
  ArtinHost h(make_dual_numbers(static_cast<int>(state.range(0))), upper_triangular(3));
  const Vec x = random_homogeneous(rng, h.host(), 0), y = random_homogeneous(rng, h.host(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(bch(h, x, y));
}
BENCHMARK(BM_Bch)->DenseRange(2, 5);

static void BM_GaugeEquivalent(benchmark::State& state) {
  Rng rng(5);
  ArtinHost h(make_dual_numbers(static_cast<int>(state.range(0))), end_dgla(window_complex(1)));
  auto z = random_mc(rng, h);
  while (!z) z = random_mc(rng, h);
  const Vec moved = gauge_act(h, random_homogeneous(rng, h.host(), 0), *z);
  for (auto _ : state) benchmark::DoNotOptimize(gauge_equivalent(h, *z, moved));
}
BENCHMARK(BM_GaugeEquivalent)->DenseRange(2, 4);

static void BM_Counterexample(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(counterexample_demo({static_cast<int>(state.range(0))}));
}
BENCHMARK(BM_Counterexample)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_Pi0SquareZero(benchmark::State& state) {
  const DGLA g = end_dgla(window_complex(static_cast<int>(state.range(0))));
  const auto r = make_dual_numbers(2);
  for (auto _ : state) benchmark::DoNotOptimize(pi0_sigma_square_zero(g, r));
}
BENCHMARK(BM_Pi0SquareZero)->DenseRange(1, 3);
