#include <benchmark/benchmark.h>

#include "pmaps/maps.hpp"
#include "pmaps/rng.hpp"

using namespace pmaps;

static void BM_SampleUniformMap(benchmark::State& state) {
  const auto ds = DegreeSequence::angulation(2, state.range(0));
  Rng rng(7);
  for (auto _ : state) benchmark::DoNotOptimize(sample_uniform_map(ds, rng));
  state.SetItemsProcessed(state.iterations() * 2 * state.range(0));
}
BENCHMARK(BM_SampleUniformMap)->Arg(1000)->Arg(100000);

static void BM_Bfs(benchmark::State& state) {
  const auto ds = DegreeSequence::angulation(2, state.range(0));
  Rng rng(8);
  const PlanarMap m = sample_uniform_map(ds, rng);
  for (auto _ : state) benchmark::DoNotOptimize(bfs_distances(m, m.star));
  state.SetItemsProcessed(state.iterations() * 2 * state.range(0));
}
BENCHMARK(BM_Bfs)->Arg(1000)->Arg(100000);

static void BM_Audit(benchmark::State& state) {
  const auto ds = DegreeSequence::angulation(2, state.range(0));
  Rng rng(9);
  const PlanarMap m = sample_uniform_map(ds, rng);
  for (auto _ : state) benchmark::DoNotOptimize(audit(m));
  state.SetItemsProcessed(state.iterations() * 2 * state.range(0));
}
BENCHMARK(BM_Audit)->Arg(100000);
