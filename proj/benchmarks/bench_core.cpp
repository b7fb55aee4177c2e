#include <benchmark/benchmark.h>

#include "sqpairs/arith.hpp"
#include "sqpairs/characters.hpp"
#include "sqpairs/pair_counter.hpp"
#include "sqpairs/windows.hpp"

using namespace sqpairs;

static void BM_BuildSieve(benchmark::State& state) {
  SieveConfig c;
  c.segment_size = 1 << 16;
  const auto hi = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_sieve(1, hi, c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildSieve)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

static void BM_CountPairsGrouped(benchmark::State& state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_pairs_grouped(x).s_x);
}
BENCHMARK(BM_CountPairsGrouped)->Arg(100'000)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

static void BM_Kronecker(benchmark::State& state) {
  std::uint64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kronecker(-static_cast<std::int64_t>(n % 1000), n | 1));
    n += 7919;
  }
}
BENCHMARK(BM_Kronecker);

static void BM_IsPrime64(benchmark::State& state) {
  std::uint64_t n = 0xFFFFFFFFFFFFFF00ULL;
  for (auto _ : state) benchmark::DoNotOptimize(is_prime(n++ | 1));
}
BENCHMARK(BM_IsPrime64);

static void BM_UpperSplit(benchmark::State& state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(upper_split(x).s1);
}
BENCHMARK(BM_UpperSplit)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
