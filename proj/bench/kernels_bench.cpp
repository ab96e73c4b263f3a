// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS set to the
// core count; with one core the pairs should be within noise of each other.

#include <benchmark/benchmark.h>

#include "ballcell/game.hpp"
#include "ballcell/montecarlo.hpp"
#include "ballcell/pgf.hpp"

namespace {

void BM_BruteForceSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ballcell::BruteForceRowSerial(n, n));
}
void BM_BruteForceParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ballcell::BruteForceRow(n, n));
}
BENCHMARK(BM_BruteForceSerial)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceParallel)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_SimulateSerial(benchmark::State& state) {
  const auto r = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(ballcell::SimulateBatchSerial(r, r, 10000, 1));
}
void BM_SimulateParallel(benchmark::State& state) {
  const auto r = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(ballcell::SimulateBatch(r, r, 10000, 1));
}
BENCHMARK(BM_SimulateSerial)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimulateParallel)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_DiagonalSerial(benchmark::State& state) {
  const int rmax = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ballcell::DiagonalSequenceSerial(rmax));
}
void BM_DiagonalParallel(benchmark::State& state) {
  const int rmax = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ballcell::DiagonalSequence(rmax));
}
BENCHMARK(BM_DiagonalSerial)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiagonalParallel)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
