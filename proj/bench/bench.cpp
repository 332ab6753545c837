// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include "linkne/discrete.hpp"
#include "linkne/fixtures.hpp"
#include "linkne/instances.hpp"
#include "linkne/parallel.hpp"

using namespace linkne;

namespace {

Subspace bench_subspace(std::size_t n) {
  AlgebraPtr q = split_etale_algebra(n);
  Rng rng(derive_seed(1, n));
  return random_unit_subspace(q, n / 2, rng);
}

void BM_AtomSerial(benchmark::State& state) {
  const Subspace v = bench_subspace(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::atom_exact_split(v, Rat(1, 2)));
}

void BM_AtomParallel(benchmark::State& state) {
  const Subspace v = bench_subspace(static_cast<std::size_t>(state.range(0)));
  set_thread_count(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(atom_exact_split(v, Rat(1, 2)));
  set_thread_count(0);
}

void BM_SweepSerial(benchmark::State& state) {
  const TablePtr g = cyclic_group(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::group_kneser_sweep(g, Exhaustive{}));
}

void BM_SweepParallel(benchmark::State& state) {
  const TablePtr g = cyclic_group(static_cast<std::size_t>(state.range(0)));
  set_thread_count(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(group_kneser_sweep(g, Exhaustive{}));
  set_thread_count(0);
}

}  // namespace

BENCHMARK(BM_AtomSerial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AtomParallel)->ArgsProduct({{7, 8}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepSerial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->ArgsProduct({{6, 7}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
