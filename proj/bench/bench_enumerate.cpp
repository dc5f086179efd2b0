// Serial reference against the OpenMP kernels. TABKIT_THREADS is not read here; use OMP_NUM_THREADS.
#include <benchmark/benchmark.h>

#include "tabkit/abtableau.hpp"
#include "tabkit/rational.hpp"
#include "tabkit/tableau.hpp"

using namespace tabkit;

namespace {

const SkewShape kSst{Partition{4, 3, 2}, Partition{1}};
const GenPartition kRational{3, 1, 0, -2};
const GenPartition kAb{2, 0, -1};

AlphabetPtr mixed() { return inline_alphabet("m", {{"p", 0}, {"q", 1}, {"r", 0}, {"s", 1}}); }

void sst_serial(benchmark::State& st) {
  auto a = naturals(4);
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_sst_serial(kSst, a).size());
}
void sst_parallel(benchmark::State& st) {
  auto a = naturals(4);
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_sst(kSst, a).size());
}
void rational_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_rational_serial(kRational).size());
}
void rational_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_rational(kRational).size());
}
void ab_serial(benchmark::State& st) {
  auto a = mixed(), b = mixed();
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_ab_serial(kAb, std::nullopt, a, b, 3).size());
}
void ab_parallel(benchmark::State& st) {
  auto a = mixed(), b = mixed();
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_ab(kAb, std::nullopt, a, b, 3).size());
}

}  // namespace

BENCHMARK(sst_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(sst_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(rational_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(rational_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(ab_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(ab_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
