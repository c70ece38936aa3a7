#include <benchmark/benchmark.h>

#include <random>

#include "apexkit/apex.hpp"
#include "apexkit/audit.hpp"
#include "apexkit/canon.hpp"
#include "apexkit/catalog.hpp"
#include "apexkit/generate.hpp"
#include "apexkit/graph6.hpp"
#include "apexkit/minors.hpp"
#include "apexkit/planarity.hpp"
#include "apexkit/search.hpp"
#include "apexkit/structure2.hpp"

using namespace apexkit;

namespace {

std::vector<Graph> random_graphs(int n, double p, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(p);
  std::vector<Graph> out;
  for (int k = 0; k < count; ++k) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (edge(rng)) g.add_edge(u, v);
    out.push_back(g);
  }
  return out;
}

std::vector<Graph> appendix() {
  std::vector<Graph> out;
  for (const auto& e : load_catalog()) out.push_back(decode_graph6(e.g6));
  return out;
}

void BM_IsPlanar(benchmark::State& state) {
  const auto gs = random_graphs(static_cast<int>(state.range(0)), 0.3, 256, 1);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_planar(gs[i++ % gs.size()]));
}
BENCHMARK(BM_IsPlanar)->Arg(10)->Arg(20)->Arg(40);

void BM_KuratowskiWitness(benchmark::State& state) {
  const auto gs = random_graphs(static_cast<int>(state.range(0)), 0.5, 256, 2);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(kuratowski_witness(gs[i++ % gs.size()]));
}
BENCHMARK(BM_KuratowskiWitness)->Arg(10)->Arg(20);

void BM_CanonicalForm(benchmark::State& state) {
  const auto gs = appendix();
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_g6(gs[i++ % gs.size()]));
}
BENCHMARK(BM_CanonicalForm);

void BM_HasMinor(benchmark::State& state) {
  const auto gs = random_graphs(9, 0.45, 64, 3);
  const Graph& p = minor_pattern("K33");
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(has_minor(gs[i++ % gs.size()], p));
}
BENCHMARK(BM_HasMinor);

void BM_IsObstruction(benchmark::State& state) {
  const auto gs = appendix();
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_obstruction(gs[i++ % gs.size()]));
}
BENCHMARK(BM_IsObstruction)->Unit(benchmark::kMicrosecond);

void BM_Classify(benchmark::State& state) {
  const auto gs = appendix();
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify(gs[i++ % gs.size()]));
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMicrosecond);

void BM_Audit(benchmark::State& state) {
  const Graph g = decode_graph6(figure_block(Figure::ThirtyNine).front());
  AuditOptions opt;
  opt.cap = 1000;
  for (auto _ : state) benchmark::DoNotOptimize(audit_graph(g, opt));
}
BENCHMARK(BM_Audit)->Unit(benchmark::kMillisecond);

void BM_GenerateConnectedPlanar(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_planar(PlanarFamily::Connected, n));
}
BENCHMARK(BM_GenerateConnectedPlanar)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

void BM_UniqueCutSearch(benchmark::State& state) {
  SearchConfig cfg;
  cfg.heavy_max = static_cast<int>(state.range(0));
  cfg.workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(unique_cut_search(cfg));
}
BENCHMARK(BM_UniqueCutSearch)->Args({7, 1})->Args({7, 4})->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
