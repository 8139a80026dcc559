#include <benchmark/benchmark.h>

#include "goeritz/obstruction.hpp"
#include "goeritz/primitivity.hpp"
#include "goeritz/shell_bridge.hpp"

using namespace goeritz;

static void BM_IsPrimitive(benchmark::State& state) {
  const CyclicWord w(parse_word("xy^5").pow(state.range(0)) * parse_word("xy^4"));
  for (auto _ : state) benchmark::DoNotOptimize(is_primitive(w));
}
BENCHMARK(BM_IsPrimitive)->Arg(4)->Arg(32)->Arg(256);

static void BM_CertifyNonprimitive(benchmark::State& state) {
  const CyclicWord w(parse_word("xy^5").pow(state.range(0)) * parse_word("xy^2"));
  for (auto _ : state) benchmark::DoNotOptimize(certify_nonprimitive(w));
}
BENCHMARK(BM_CertifyNonprimitive)->Arg(4)->Arg(32);

static void BM_EnumeratePrimitives(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_primitives(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumeratePrimitives)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_ShellWords(benchmark::State& state) {
  const std::int64_t p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(shell_words(p, 7));
}
BENCHMARK(BM_ShellWords)->Arg(50)->Arg(500);

static void BM_ShellSweep(benchmark::State& state) {
  for (auto _ : state) {
    for (std::int64_t p = 4; p <= state.range(0); ++p) {
      for (std::int64_t q = 2; 2 * q <= p; ++q) {
        if (gcd(p, q) == 1) benchmark::DoNotOptimize(oracle_primitive_indices(shell_words(p, q)));
      }
    }
  }
}
BENCHMARK(BM_ShellSweep)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_FindBridge(benchmark::State& state) {
  const LensSpace L(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(find_bridge(L, L.q(), 4096));
}
BENCHMARK(BM_FindBridge)->Args({12, 5})->Args({23, 7})->Args({1009, 17});

BENCHMARK_MAIN();
