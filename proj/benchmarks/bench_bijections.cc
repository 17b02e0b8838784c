#include <benchmark/benchmark.h>

#include "pmaps/bijections.hpp"
#include "pmaps/rng.hpp"
#include "pmaps/sampling.hpp"

using namespace pmaps;

static void BM_JsInverse(benchmark::State& state) {
  const auto ds = DegreeSequence::angulation(2, state.range(0));
  Rng rng(4);
  const PlaneTree tree = sample_tree(ds, rng);
  for (auto _ : state) benchmark::DoNotOptimize(js_inverse(tree));
  state.SetItemsProcessed(state.iterations() * tree.size());
}
BENCHMARK(BM_JsInverse)->Arg(100000)->Arg(1000000);

static void BM_BdgBuild(benchmark::State& state) {
  const auto ds = DegreeSequence::angulation(2, state.range(0));
  Rng rng(5);
  const auto lt = label_tree(sample_tree(ds, rng), rng);
  const auto two = js_inverse_labelled(lt);
  for (auto _ : state)
    benchmark::DoNotOptimize(bdg_build_map(two.two, two.labels, Orientation::plus));
  state.SetItemsProcessed(state.iterations() * 2 * state.range(0));
}
BENCHMARK(BM_BdgBuild)->Arg(100000)->Arg(500000);

static void BM_BdgInverse(benchmark::State& state) {
  const auto ds = DegreeSequence::angulation(2, state.range(0));
  Rng rng(6);
  const auto lt = label_tree(sample_tree(ds, rng), rng);
  const auto two = js_inverse_labelled(lt);
  const BdgMap built = bdg_build_map(two.two, two.labels, Orientation::plus);
  for (auto _ : state) benchmark::DoNotOptimize(bdg_inverse(built.map));
  state.SetItemsProcessed(state.iterations() * 2 * state.range(0));
}
BENCHMARK(BM_BdgInverse)->Arg(100000)->Arg(500000);
