#include <benchmark/benchmark.h>

#include "ecg/constructions.hpp"
#include "ecg/extraction.hpp"
#include "ecg/rainbow.hpp"
#include "ecg/rng.hpp"
#include "ecg/saturation.hpp"
#include "ecg/verify.hpp"

namespace {

ecg::ColoredGraph boundary_host(int n, int colors, uint64_t seed) {
  ecg::Rng rng(seed);
  return ecg::sample_surjective_coloring(rng, ecg::complete_host(n), colors);
}

void BM_EnumerateRainbowTriangles(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  ecg::ColoredGraph g = boundary_host(n, 2 * n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(ecg::enumerate_rainbow_triangles(g));
}
BENCHMARK(BM_EnumerateRainbowTriangles)->Arg(20)->Arg(40)->Arg(80);

void BM_SaturationIndexBuild(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  ecg::ColoredGraph g = boundary_host(n, 2 * n, 11);
  for (auto _ : state) {
    ecg::SaturationIndex idx(g);
    benchmark::DoNotOptimize(idx.phi1(0));
  }
}
BENCHMARK(BM_SaturationIndexBuild)->Arg(16)->Arg(26)->Arg(40);

void BM_PeelKn(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  ecg::ColoredGraph g = boundary_host(n, 2 * n - 2, 13);
  for (auto _ : state) benchmark::DoNotOptimize(ecg::run_peeling(g, 2));
}
BENCHMARK(BM_PeelKn)->Arg(26)->Arg(40);

void BM_DisjointPackSearch(benchmark::State& state) {
  ecg::ColoredGraph g = boundary_host(static_cast<int>(state.range(0)), 50, 17);
  for (auto _ : state)
    benchmark::DoNotOptimize(ecg::find_disjoint_rainbow_cliques(g, 3, 2));
}
BENCHMARK(BM_DisjointPackSearch)->Arg(20)->Arg(26);

void BM_ColoringEnumeration(benchmark::State& state) {
  for (auto _ : state) {
    ecg::ColoringEnumerator en(ecg::complete_host(4));
    long long count = 0;
    while (en.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_ColoringEnumeration);

}  // namespace

BENCHMARK_MAIN();
