// Serial reference versus OpenMP enumeration on the four exhaustive kernels.

#include <benchmark/benchmark.h>

#include "patternsort/grid.hpp"
#include "patternsort/machine.hpp"
#include "patternsort/paths.hpp"
#include "patternsort/rgf.hpp"

using namespace patternsort;

namespace {

const Permutation kSigma{1, 3, 2};
const std::vector<int> k12231{1, 2, 2, 3, 1};

void BM_EnumerateSortableSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_sortable_serial(n, kSigma));
}

void BM_EnumerateSortableParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_sortable(n, kSigma));
}

void BM_GenerateSortableSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_sortable_serial(n));
}

void BM_GenerateSortableParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_sortable(n));
}

void BM_AvoidersSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_avoiders_serial(n, k12231));
}

void BM_AvoidersParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_avoiders(n, k12231));
}

void BM_DyckSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_dyck_serial(n));
}

void BM_DyckParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_dyck(n));
}

}  // namespace

BENCHMARK(BM_EnumerateSortableSerial)->DenseRange(8, 10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSortableParallel)->DenseRange(8, 10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenerateSortableSerial)->DenseRange(8, 10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenerateSortableParallel)->DenseRange(8, 10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AvoidersSerial)->DenseRange(9, 11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AvoidersParallel)->DenseRange(9, 11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DyckSerial)->DenseRange(10, 12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DyckParallel)->DenseRange(10, 12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
