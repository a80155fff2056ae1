#include "cxwidths/harmonic_basis.hpp"
#include "cxwidths/harmonic_dims.hpp"
#include "cxwidths/levy.hpp"
#include "cxwidths/multipliers.hpp"
#include "cxwidths/sphere_mc.hpp"
#include "cxwidths/widths.hpp"

#include <benchmark/benchmark.h>

using namespace cxw;
using multipliers::MultiplierFamily;

static void BM_DimT(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(harmonic_dims::dim_T(4, N, Grading::max));
}
BENCHMARK(BM_DimT)->Arg(100)->Arg(10000);

static void BM_BuildBasis(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0)), m = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(harmonic_basis::build_harmonic_basis(d, {m, m}));
}
BENCHMARK(BM_BuildBasis)->Args({2, 2})->Args({2, 4})->Args({3, 2})->Args({3, 4})->Unit(benchmark::kMillisecond);

static void BM_BasisEval(benchmark::State& state) {
  const auto h = harmonic_basis::build_harmonic_basis(3, {3, 2});
  const auto pts = sphere_mc::sample_omega(3, 1024, 1);
  for (auto _ : state) {
    for (const auto& z : pts) benchmark::DoNotOptimize(harmonic_basis::eval_basis_function(h, 0, z));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(pts.size()));
}
BENCHMARK(BM_BasisEval);

static void BM_SampleOmega(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sphere_mc::sample_omega(3, n, 7));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
}
BENCHMARK(BM_SampleOmega)->Arg(1 << 14)->Arg(1 << 18);

static void BM_AdditionCheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(harmonic_basis::verify_addition(3, {2, 2}, 1000, 0));
}
BENCHMARK(BM_AdditionCheck)->Unit(benchmark::kMillisecond);

static void BM_WidthTable(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto fam = MultiplierFamily::finite_smooth(3, 0);
  for (auto _ : state) benchmark::DoNotOptimize(widths::l2_width_table(fam, 2, n));
}
BENCHMARK(BM_WidthTable)->Arg(10000)->Arg(1000000)->Unit(benchmark::kMillisecond);

static void BM_PowerFit(benchmark::State& state) {
  const auto t = widths::l2_width_table(MultiplierFamily::finite_smooth(3, 2), 2, 1000000);
  for (auto _ : state) benchmark::DoNotOptimize(widths::fit_power(t, {}, true));
}
BENCHMARK(BM_PowerFit)->Unit(benchmark::kMillisecond);

static void BM_LevyMean(benchmark::State& state) {
  const auto prob = levy::make_levy_problem(2, 1, 2, MultiplierFamily::exp_analytic(1, 1), 4.0);
  for (auto _ : state) benchmark::DoNotOptimize(levy::levy_mean_mc(prob, 100, 10000, 0));
}
BENCHMARK(BM_LevyMean)->Unit(benchmark::kMillisecond);

static void BM_PlanBeta(benchmark::State& state) {
  const auto fam = MultiplierFamily::finite_smooth(3, 0);
  for (auto _ : state) benchmark::DoNotOptimize(multipliers::plan_beta(fam, 2, 20, 0.5));
}
BENCHMARK(BM_PlanBeta);

BENCHMARK_MAIN();
