#include <benchmark/benchmark.h>

#include "ghyp/analyzer.hpp"
#include "ghyp/dual.hpp"
#include "ghyp/fourier.hpp"
#include "ghyp/quadrature.hpp"

#include <memory>

using namespace ghyp;

// Covers both the factorial sum (small J) and the matrix exponential path.
static void BM_WignerSmallD(benchmark::State& state) {
  const int twice = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wigner_small_d(twice, 0.7));
}
BENCHMARK(BM_WignerSmallD)->Arg(4)->Arg(30)->Arg(60)->Arg(120);

static void BM_ForwardSu2(benchmark::State& state) {
  const double band = su2_cutoff_for_ell(static_cast<double>(state.range(0)));
  auto grid = std::make_shared<const QuadratureGrid>(build_grid(GroupId::su2(), band));
  const auto duals = enumerate_dual(GroupId::su2(), band);
  const RepTable table(*grid, duals);
  const auto f = GridFunction::sample(grid, [](const GroupPoint& x) { return rep_eval(DualIndex::su2_twice(2), x)(0, 1); });
  for (auto _ : state) benchmark::DoNotOptimize(forward(f, table));
  state.counters["nodes"] = static_cast<double>(grid->size());
}
BENCHMARK(BM_ForwardSu2)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_ProfileNeutral(benchmark::State& state) {
  const double cutoff = su2_cutoff_for_ell(static_cast<double>(state.range(0)));
  const auto sym = neutral_plus_c(Complex(0.3, 0.1));
  for (auto _ : state) benchmark::DoNotOptimize(profile_group(sym, cutoff));
}
BENCHMARK(BM_ProfileNeutral)->Arg(20)->Arg(80)->Unit(benchmark::kMillisecond);

static void BM_ProfileBundle(benchmark::State& state) {
  const double cutoff = su2_cutoff_for_ell(static_cast<double>(state.range(0)));
  const auto sym = bundle_from_symbol(su2_sublaplacian_model(2.0));
  for (auto _ : state) benchmark::DoNotOptimize(profile_bundle(sym, cutoff));
}
BENCHMARK(BM_ProfileBundle)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
