#include <benchmark/benchmark.h>

#include "pronorm/constructions.hpp"
#include "pronorm/odd_index.hpp"
#include "pronorm/pronormality.hpp"

using namespace pronorm;

static void BM_FrobeniusDiagonalVerdict(benchmark::State& state) {
  BuiltGroup ff =
      realize(GroupSpec::product({GroupSpec::frobenius73(), GroupSpec::frobenius73()}));
  Perm seven = Perm::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}});
  PermGroup d = diagonal_subgroup(ff, 0, 1, {seven}, {seven});
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_pronormal(ff.group, d).pronormal());
  }
}
BENCHMARK(BM_FrobeniusDiagonalVerdict)->Unit(benchmark::kMillisecond);

static void BM_WreathTopVerdict(benchmark::State& state) {
  BuiltGroup w = realize(GroupSpec::wreath(GroupSpec::cyclic(5), 3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_pronormal(w.group, w.handle("top")).pronormal());
  }
}
BENCHMARK(BM_WreathTopVerdict)->Unit(benchmark::kMillisecond);

static void BM_OddIndexEnumAlt5Sq(benchmark::State& state) {
  BuiltGroup aa = realize(GroupSpec::product({GroupSpec::alt(5), GroupSpec::alt(5)}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(odd_index_subgroups(aa.group).subgroups.size());
  }
}
BENCHMARK(BM_OddIndexEnumAlt5Sq)->Unit(benchmark::kMillisecond);

