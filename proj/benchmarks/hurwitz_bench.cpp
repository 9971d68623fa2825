#include <benchmark/benchmark.h>

#include "hurwitz/characters.hpp"
#include "hurwitz/hurwitz.hpp"
#include "hurwitz/jack.hpp"
#include "hurwitz/oracle.hpp"

using namespace hurwitz;

// Direct Murnaghan-Nakayama over a whole table, bypassing the memo.
static void BM_CharacterTable(benchmark::State& state) {
  const auto parts = enumerate_partitions(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::int64_t acc = 0;
    for (const auto& l : parts)
      for (const auto& mu : parts) acc += murnaghan_nakayama(l, mu);
    benchmark::DoNotOptimize(acc);
  }
  state.counters["classes"] = static_cast<double>(parts.size());
}
BENCHMARK(BM_CharacterTable)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_CompletedSum(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const ProfileSet p(d, {Partition::row(d)});
  char_table(d);
  for (auto _ : state) benchmark::DoNotOptimize(completed_hurwitz(40, 2, p, false).scalar());
}
BENCHMARK(BM_CompletedSum)->DenseRange(6, 16, 5)->Unit(benchmark::kMillisecond);

static void BM_HypergeometricSeries(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const ProfileSet p(d, {});
  char_table(d);
  for (auto _ : state) benchmark::DoNotOptimize(hypergeometric_series(20, GSpec{1, 1, 1}, p));
}
BENCHMARK(BM_HypergeometricSeries)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_JackFamily(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rational alpha(3);
  for (auto _ : state) {
    // a fresh parameter each round so the memo never answers
    alpha += 1;
    benchmark::DoNotOptimize(jack_in_psums(Partition::row(d), alpha));
  }
}
BENCHMARK(BM_JackFamily)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_Oracle(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const FactorizationQuery q{4, {Partition{2, 2}}, {{r, BlockConstraint::weak}}, false};
  for (auto _ : state) benchmark::DoNotOptimize(count_factorizations(q));
}
BENCHMARK(BM_Oracle)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
