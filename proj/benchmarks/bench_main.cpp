#include "bsg/ham_builder.hpp"
#include "bsg/small_cycles.hpp"

#include <benchmark/benchmark.h>

using namespace bsg;

static void BM_cycle_oracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int len = static_cast<int>(state.range(1));
  const Permutation p = Permutation::identity(n);
  for (auto _ : state) {
    auto cycles = enumerate_cycles_through(p, len);
    benchmark::DoNotOptimize(cycles);
  }
}
BENCHMARK(BM_cycle_oracle)
    ->Args({4, 4})->Args({5, 4})->Args({6, 4})->Args({7, 4})
    ->Args({4, 6})->Args({5, 6})->Args({6, 6})->Args({7, 6});

static void BM_family_instantiation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Permutation p = Permutation::identity(n);
  for (auto _ : state) {
    auto c4 = cycles_through_vertex(p, 4);
    auto c6 = cycles_through_vertex(p, 6);
    benchmark::DoNotOptimize(c4);
    benchmark::DoNotOptimize(c6);
  }
}
BENCHMARK(BM_family_instantiation)->Arg(5)->Arg(7)->Arg(9);

static void BM_census(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto c = census(n);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_census)->Arg(5)->Arg(6)->Arg(7);

static void BM_sjt(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto f = sjt_cycle(n);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_sjt)->Arg(5)->Arg(7)->Arg(9);

static void BM_ham_build(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto f = build_hamiltonian_cycle(n);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_ham_build)->Arg(5)->Arg(6)->Arg(7)->Arg(8)->Arg(9)
    ->Unit(benchmark::kMillisecond);

static void BM_validate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Form f = build_hamiltonian_cycle(n);
  for (auto _ : state) {
    auto r = validate_gray_code(n, f, true);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_validate)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
