#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hypersplit/matroid.hpp"
#include "hypersplit/multisplit.hpp"
#include "hypersplit/stiefel.hpp"
#include "hypersplit/subdivision.hpp"

using namespace hypersplit;

static void CountSplits(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto c = count_multisplits_formula(2, n, 2);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(CountSplits)->Arg(8)->Arg(10)->Arg(12);

static void EnumerateSplits(benchmark::State& state) {
  for (auto _ : state) {
    auto splits = enumerate_multisplits(3, static_cast<int>(state.range(0)), 2);
    benchmark::DoNotOptimize(splits);
  }
}
BENCHMARK(EnumerateSplits)->Arg(6)->Arg(7)->Arg(8);

static void CorankEngine(benchmark::State& state) {
  MultiSplit ms(RankedPartition{
      6, {Subset::of({1, 2}, 6), Subset::of({3, 4}, 6), Subset::of({5, 6}, 6)}, {1, 1, 1}});
  Matroid cell = multisplit_cells(ms).maximal[0];
  for (auto _ : state) {
    Subdivision s = corank_subdivision(cell);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(CorankEngine);

static void LinearityDimension(benchmark::State& state) {
  MultiSplit ms(RankedPartition{
      6, {Subset::of({1, 2, 3}, 6), Subset::of({4, 5, 6}, 6)}, {2, 1}});
  Subdivision s = corank_subdivision(multisplit_cells(ms).maximal[0]);
  for (auto _ : state) {
    auto lin = secondary_linearity_dimension(s.config, s);
    benchmark::DoNotOptimize(lin);
  }
}
BENCHMARK(LinearityDimension);

static void AssignmentMin(benchmark::State& state) {
  const int s_n = static_cast<int>(state.range(0));
  std::mt19937_64 gen(1234);
  std::uniform_int_distribution<int> num(-30, 30);
  std::vector<std::vector<Rat>> w(s_n, std::vector<Rat>(s_n));
  for (auto& row : w)
    for (Rat& x : row) x = rat(num(gen), 1 + static_cast<int>(gen() % 7));
  for (auto _ : state) {
    Rat m = assignment_min(w);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(AssignmentMin)->Arg(4)->Arg(6)->Arg(8);

static void StiefelLiftFull(benchmark::State& state) {
  std::mt19937_64 gen(777);
  std::uniform_int_distribution<int> num(-20, 20);
  ProductLifting pl(7, Subset::of({1, 3, 5}, 7));
  for (Rat& h : pl.lambda) h = rat(num(gen), 1 + static_cast<int>(gen() % 5));
  for (auto _ : state) {
    Lifting p = stiefel_lift(pl);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(StiefelLiftFull);

BENCHMARK_MAIN();
