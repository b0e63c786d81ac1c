#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "extremal/biregularize.hpp"
#include "extremal/construct.hpp"
#include "extremal/family.hpp"
#include "extremal/finders.hpp"
#include "extremal/generators.hpp"
#include "extremal/light_paths.hpp"
#include "extremal/linkage.hpp"
#include "extremal/regularize.hpp"

using namespace extremal;

namespace {

void BM_EnhancedRegularize(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = random_graph(n, 0.3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(enhanced_regularize(g, make_rational(1, 2), make_rational(1, 2)));
  state.SetComplexityN(n);
}
BENCHMARK(BM_EnhancedRegularize)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_Biregularize(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  BipartiteGraph g = random_bipartite(m, 2 * m, 0.5, 11);
  for (auto _ : state) benchmark::DoNotOptimize(biregularize(g, make_rational(1, 2), 1, make_rational(1, 2)));
}
BENCHMARK(BM_Biregularize)->RangeMultiplier(2)->Range(16, 256);

void BM_MinRoof(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  BipartiteGraph g = random_bipartite(m, 4 * m, 0.2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(min_roof(g.without_isolated()));
}
BENCHMARK(BM_MinRoof)->RangeMultiplier(2)->Range(16, 512);

void BM_ExtractRobust(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  BipartiteGraph host = random_bipartite(n, n, 0.6, 3);
  EmbeddingFamily fam = enumerate_copies(host, LabeledTree::path(3), true);
  for (auto _ : state) benchmark::DoNotOptimize(extract_robust(fam, 3));
  state.counters["members"] = static_cast<double>(fam.size());
}
BENCHMARK(BM_ExtractRobust)->Arg(8)->Arg(12)->Arg(16);

void BM_LightPaths(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  BipartiteGraph g = complete_bipartite(d, d);
  for (auto _ : state) benchmark::DoNotOptimize(light_path_collection(g, 3, 4));
}
BENCHMARK(BM_LightPaths)->Arg(8)->Arg(12)->Arg(16);

void BM_FindThetaFree(benchmark::State& state) {
  // The cycle holds no theta, so the search is exhaustive.
  Graph g = cycle_graph(static_cast<int>(state.range(0)));
  FindOptions opt;
  opt.threads = 1;
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    FindResult r = find_pattern(g, PatternSpec::theta(2, 3), opt);
    nodes = r.nodes;
    benchmark::DoNotOptimize(r);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_FindThetaFree)->RangeMultiplier(2)->Range(16, 256);

void BM_FindSubdivisionRandom(benchmark::State& state) {
  BipartiteGraph g = random_bipartite(20, 20, 0.12, 9);
  FindOptions opt;
  opt.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(find_pattern(g, PatternSpec::kst_subdivision(2, 3, 2), opt));
}
BENCHMARK(BM_FindSubdivisionRandom)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

void BM_SampleConstruction(benchmark::State& state) {
  LabeledTree p3 = LabeledTree::path(2);
  std::vector<OrientedTree> family{OrientedTree(p3, true), OrientedTree(p3, false)};
  ConstructionSpec spec = ConstructionSpec::from_family(family, 1, state.range(0), 1);
  for (auto _ : state) {
    ++spec.seed;
    benchmark::DoNotOptimize(sample_construction(spec));
  }
}
BENCHMARK(BM_SampleConstruction)->Arg(5)->Arg(11)->Arg(17);

void BM_PruneBadRoots(benchmark::State& state) {
  LabeledTree p3 = LabeledTree::path(2);
  std::vector<OrientedTree> family{OrientedTree(p3, true), OrientedTree(p3, false)};
  ConstructionSpec spec = ConstructionSpec::from_family(family, 1, state.range(0), 1);
  BipartiteGraph g = sample_construction(spec);
  for (auto _ : state) benchmark::DoNotOptimize(prune_bad_roots(g, family, 3));
}
BENCHMARK(BM_PruneBadRoots)->Arg(5)->Arg(7)->Arg(11);

void BM_BalanceCheck(benchmark::State& state) {
  OrientedTree t(LabeledTree::spider(std::vector<int>(3, static_cast<int>(state.range(0)))), true);
  for (auto _ : state) benchmark::DoNotOptimize(check_alpha_balanced(t, make_rational(4, 5)));
}
BENCHMARK(BM_BalanceCheck)->DenseRange(2, 5);

}  // namespace
BENCHMARK_MAIN();
