#include <benchmark/benchmark.h>

#include "pronorm/constructions.hpp"
#include "pronorm/rng.hpp"

using namespace pronorm;

static void BM_ChainSp43(benchmark::State& state) {
  for (auto _ : state) {
    BuiltGroup g = realize(GroupSpec::sp(2, 3));
    benchmark::DoNotOptimize(g.group.order());
  }
}
BENCHMARK(BM_ChainSp43)->Unit(benchmark::kMillisecond);

static void BM_ChainSp63(benchmark::State& state) {
  for (auto _ : state) {
    BuiltGroup g = realize(GroupSpec::sp(3, 3));
    benchmark::DoNotOptimize(g.group.order());
  }
}
BENCHMARK(BM_ChainSp63)->Unit(benchmark::kMillisecond);

static void BM_Membership(benchmark::State& state) {
  BuiltGroup g = realize(GroupSpec::sp(3, 3));
  Rng rng(1);
  std::vector<Perm> probes;
  for (int i = 0; i < 64; ++i) probes.push_back(g.group.random_element(rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g.group.contains(probes[i++ % probes.size()]));
  }
}
BENCHMARK(BM_Membership);

static void BM_Compose728(benchmark::State& state) {
  BuiltGroup g = realize(GroupSpec::sp(3, 3));
  Rng rng(2);
  Perm a = g.group.random_element(rng), b = g.group.random_element(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_Compose728);

BENCHMARK_MAIN();
