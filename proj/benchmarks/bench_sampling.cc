#include <benchmark/benchmark.h>

#include "pmaps/rng.hpp"
#include "pmaps/sampling.hpp"

using namespace pmaps;

static void BM_SampleTree(benchmark::State& state) {
  const auto ds = DegreeSequence::angulation(2, state.range(0));
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sample_tree(ds, rng));
  state.SetItemsProcessed(state.iterations() * 2 * state.range(0));
}
BENCHMARK(BM_SampleTree)->Arg(1000)->Arg(100000)->Arg(1000000);

static void BM_LabelTree(benchmark::State& state) {
  const auto ds = DegreeSequence::angulation(2, state.range(0));
  Rng rng(2);
  const PlaneTree tree = sample_tree(ds, rng);
  for (auto _ : state) benchmark::DoNotOptimize(label_tree(tree, rng));
  state.SetItemsProcessed(state.iterations() * tree.size());
}
BENCHMARK(BM_LabelTree)->Arg(1000)->Arg(100000)->Arg(1000000);

static void BM_Encodings(benchmark::State& state) {
  const auto ds = DegreeSequence::angulation(2, state.range(0));
  Rng rng(3);
  const PlaneTree tree = sample_tree(ds, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(height_process(tree));
    benchmark::DoNotOptimize(modified_height(tree));
    benchmark::DoNotOptimize(contour_process(tree));
  }
  state.SetItemsProcessed(state.iterations() * tree.size());
}
BENCHMARK(BM_Encodings)->Arg(100000)->Arg(1000000);
