// Serial reference scans vs. their OpenMP counterparts.

#include <symsens/brute.hpp>
#include <symsens/core.hpp>
#include <symsens/distribution.hpp>

#include <benchmark/benchmark.h>

namespace {

void BM_CensusSerial(benchmark::State& state) {
  auto const n = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(symsens::census_serial(n));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (n + 1)));
}

void BM_CensusParallel(benchmark::State& state) {
  auto const n = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(symsens::census(n));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (n + 1)));
}

// Three middle weights set to 1: every run is longer than 1, so s < n and
// neither scan stops early.
symsens::TruthTable slow_table(unsigned n) {
  std::vector<std::uint8_t> values(n + 1, 0);
  for (unsigned k = n / 2 - 1; k <= n / 2 + 1; ++k)
    values[k] = 1;
  return symsens::expand(symsens::CompactTruthTable(values));
}

void BM_BruteSerial(benchmark::State& state) {
  auto const t = slow_table(static_cast<unsigned>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(symsens::brute::sensitivity_serial(t));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(t.size()));
}

void BM_BruteParallel(benchmark::State& state) {
  auto const t = slow_table(static_cast<unsigned>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(symsens::brute::sensitivity(t));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(t.size()));
}

} // namespace

BENCHMARK(BM_CensusSerial)->DenseRange(16, 22, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->DenseRange(16, 22, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteSerial)->DenseRange(14, 20, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteParallel)->DenseRange(14, 20, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
