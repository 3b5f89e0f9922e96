#include <benchmark/benchmark.h>

#include "kchord/bounds.hpp"
#include "kchord/canonical_sets.hpp"
#include "kchord/constructions.hpp"
#include "kchord/search.hpp"

using namespace kchord;

static void BM_EnumerateCrossing(benchmark::State& state) {
  int p = static_cast<int>(state.range(0));
  ChordDiagram d = crossing_family(2 * p, p);
  for (auto _ : state) {
    auto s = enumerate_cycles(d);
    benchmark::DoNotOptimize(s.total_cycles);
  }
  state.SetComplexityN(p);
}
BENCHMARK(BM_EnumerateCrossing)->DenseRange(6, 16, 2)->Complexity();

static void BM_Canonicalize(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  ChordUniverse U = ChordUniverse::build(n);
  std::vector<Chord> chords;
  for (int i = 0; i < U.size(); i += U.size() / 5) chords.push_back(U.chords[i]);
  ChordDiagram d = make_diagram(n, chords);
  for (auto _ : state) {
    auto cf = canonicalize(d);
    benchmark::DoNotOptimize(cf.stabilizer_size);
  }
}
BENCHMARK(BM_Canonicalize)->DenseRange(8, 16, 2);

static void BM_ExhaustLevel(benchmark::State& state) {
  for (auto _ : state) {
    auto r = exhaust_level(8, 3, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(r.canonical_sets);
  }
}
BENCHMARK(BM_ExhaustLevel)->DenseRange(3, 5, 1);

static void BM_SearchSmall(benchmark::State& state) {
  for (auto _ : state) {
    auto r = search_c(8, 3);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_SearchSmall);

static void BM_LambertW(benchmark::State& state) {
  double x = -0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambert_w(-1, x));
  }
}
BENCHMARK(BM_LambertW);

BENCHMARK_MAIN();
