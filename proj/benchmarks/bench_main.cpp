#include <benchmark/benchmark.h>

#include "gupsu2/eigenfunctions.hpp"
#include "gupsu2/operators.hpp"
#include "gupsu2/random_family.hpp"
#include "gupsu2/sturm_oracle.hpp"
#include "gupsu2/verification.hpp"

namespace {

void BM_OracleSpectrum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gupsu2::oracle_spectrum(2.0, 1.0, n, 5));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OracleSpectrum)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

void BM_Eigenfunction(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gupsu2::eigenfunction(n, 1.5, 0.5));
}
BENCHMARK(BM_Eigenfunction)->DenseRange(0, 12, 4);

void BM_ShapeInvarianceResidual(benchmark::State& state) {
  gupsu2::RandomFamily rf(1);
  const gupsu2::AlgebraicFunction f = rf.function(2.5, 1.0, 6);
  for (auto _ : state) benchmark::DoNotOptimize(gupsu2::shape_invariance_residual(0.7, f));
}
BENCHMARK(BM_ShapeInvarianceResidual);

void BM_VerifySuite(benchmark::State& state) {
  const auto suite = gupsu2::kAllSuites[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(std::string(gupsu2::to_string(suite)));
  for (auto _ : state) benchmark::DoNotOptimize(gupsu2::run_suite(suite));
}
BENCHMARK(BM_VerifySuite)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
