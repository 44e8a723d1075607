#include <benchmark/benchmark.h>

#include "symbpow/containment.hpp"
#include "symbpow/decomposition.hpp"
#include "symbpow/determinantal.hpp"
#include "symbpow/frobenius.hpp"
#include "symbpow/symbolic.hpp"

using namespace symbpow;

static void BM_PowerOfStar(benchmark::State& state) {
  const MonomialIdeal star = star_configuration(6, 3);
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(power(star, n));
}
BENCHMARK(BM_PowerOfStar)->DenseRange(2, 4);

static void BM_SymbolicPowerOfStar(benchmark::State& state) {
  const MonomialIdeal star = star_configuration(6, 3);
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(symbolic_power(star, n));
}
BENCHMARK(BM_SymbolicPowerOfStar)->DenseRange(2, 6, 2);

static void BM_IrreducibleDecomposition(benchmark::State& state) {
  const MonomialIdeal squared = power(star_configuration(static_cast<unsigned>(state.range(0)), 2), 2);
  for (auto _ : state) benchmark::DoNotOptimize(irreducible_decomposition(squared));
}
BENCHMARK(BM_IrreducibleDecomposition)->DenseRange(4, 6);

static void BM_ContainsSymbolicInPower(benchmark::State& state) {
  const MonomialIdeal star = star_configuration(6, 2);
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(contains_symbolic_in_power(star, 2 * n - 1, n));
}
BENCHMARK(BM_ContainsSymbolicInPower)->DenseRange(2, 4);

static void BM_FedderCheck(benchmark::State& state) {
  const MonomialIdeal star = star_configuration(6, 3);
  const auto q = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fedder_check(star, q));
}
BENCHMARK(BM_FedderCheck)->Arg(2)->Arg(3)->Arg(8);

static void BM_SharpContainment(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(det::sharp_containment(5, 3, k));
}
BENCHMARK(BM_SharpContainment)->Arg(4)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
