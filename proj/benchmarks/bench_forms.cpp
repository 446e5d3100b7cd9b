#include <benchmark/benchmark.h>

#include "mcdeform/deligne.hpp"
#include "mcdeform/forms.hpp"
#include "test_support.hpp"

using namespace mcdeform;
using namespace mcdeform::testing;

static void BM_Wedge(benchmark::State& state) {
  Rng rng(6);
  const int n = static_cast<int>(state.range(0));
  const SullivanForm u = random_form(rng, n, 3, 6), w = random_form(rng, n, 3, 6);
  for (auto _ : state) benchmark::DoNotOptimize(wedge(u, w));
}
BENCHMARK(BM_Wedge)->DenseRange(1, 3);

static void BM_OmegaD(benchmark::State& state) {
  Rng rng(7);
  const SullivanForm w = random_form(rng, static_cast<int>(state.range(0)), 4, 8);
  for (auto _ : state) benchmark::DoNotOptimize(omega_d(w));
}
BENCHMARK(BM_OmegaD)->DenseRange(1, 3);

static void BM_FaceMap(benchmark::State& state) {
  Rng rng(8);
  const SullivanForm w = random_form(rng, 3, 4, 8);
  for (auto _ : state) benchmark::DoNotOptimize(face_map(static_cast<int>(state.range(0)), w));
}
BENCHMARK(BM_FaceMap)->DenseRange(0, 3);

static void BM_GaugePath(benchmark::State& state) {
  Rng rng(9);
  ArtinHost h(make_dual_numbers(static_cast<int>(state.range(0))), graded_fixture());
  auto z = random_mc(rng, h);
  while (!z) z = random_mc(rng, h);
  const Vec gamma = random_homogeneous(rng, h.host(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(gauge_path(h, *z, gamma));
}
BENCHMARK(BM_GaugePath)->DenseRange(2, 4);
