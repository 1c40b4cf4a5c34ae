#include <benchmark/benchmark.h>

#include "trunc_hermite/moments.hpp"
#include "trunc_hermite/quadrature.hpp"
#include "trunc_hermite/recurrence.hpp"
#include "trunc_hermite/stieltjes.hpp"

namespace th = trunc_hermite;

namespace {

th::PrecisionConfig config(benchmark::State& state) {
  return th::PrecisionConfig::with_digits(static_cast<int>(state.range(1)));
}

void BM_MomentTable(benchmark::State& state) {
  const auto cfg = config(state);
  const th::Real z(1, cfg.digits());
  for (auto _ : state) benchmark::DoNotOptimize(th::build_moment_table(static_cast<int>(state.range(0)), z, cfg));
}
BENCHMARK(BM_MomentTable)->Args({20, 56})->Args({100, 216});

void BM_GammaTable(benchmark::State& state) {
  const auto cfg = config(state);
  const th::Real z(1, cfg.digits());
  for (auto _ : state) benchmark::DoNotOptimize(th::build_gamma_table(static_cast<int>(state.range(0)), z, cfg));
}
BENCHMARK(BM_GammaTable)->Args({20, 56})->Args({100, 216});

void BM_GaussRule(benchmark::State& state) {
  const auto cfg = config(state);
  const th::Real z(1, cfg.digits());
  const int n = static_cast<int>(state.range(0));
  const auto table = th::build_gamma_table(n + 1, z, cfg);
  const auto u0 = th::moment_zero(z, cfg);
  for (auto _ : state) benchmark::DoNotOptimize(th::zeros_newton_refine(th::gauss_rule(n, table, u0), table));
}
BENCHMARK(BM_GaussRule)->Args({12, 56})->Args({40, 96});

void BM_Stieltjes(benchmark::State& state) {
  const auto cfg = config(state);
  const th::Real z(1, cfg.digits());
  const th::Real t(static_cast<int>(state.range(0)), cfg.digits());
  const auto table = th::build_moment_table(th::stieltjes_terms_needed(t, z, cfg), z, cfg);
  for (auto _ : state) benchmark::DoNotOptimize(th::stieltjes_eval(t, z, table));
}
BENCHMARK(BM_Stieltjes)->Args({3, 56})->Args({3, 116});

}  // namespace

BENCHMARK_MAIN();
