// Microbenchmarks for the fitting kernels, the restoration paths, and
// the diagnostic sweep.  Build with GREYSD_BUILD_BENCHMARKS=ON; these
// are not part of the test suite.

#include <vector>

#include <benchmark/benchmark.h>

#include "greysd/dataset.hpp"
#include "greysd/diagnostics.hpp"
#include "greysd/models.hpp"

using namespace greysd;

namespace {

const Series &gdp() {
  static const Series s = fixture("gdp_lanzhou").to_series();
  return s;
}

std::vector<double> doubling_series() {
  std::vector<double> x(12);
  double v = 0.05;
  for (int k = 0; k < 12; ++k) {
    v *= 2.25;
    x[k] = v;
  }
  return x;
}

void bm_fit_gm11(benchmark::State &state) {
  const Series &s = gdp();
  const SplitSpec split{6, 0};
  for (auto _ : state)
    benchmark::DoNotOptimize(fit_gm11(s, split));
}
BENCHMARK(bm_fit_gm11);

void bm_fit_dgm11(benchmark::State &state) {
  const Series &s = gdp();
  const SplitSpec split{6, 0};
  for (auto _ : state)
    benchmark::DoNotOptimize(fit_dgm11(s, split));
}
BENCHMARK(bm_fit_dgm11);

void bm_fit_gm_sc(benchmark::State &state) {
  const Series &s = gdp();
  const SplitSpec split{6, 0};
  for (auto _ : state)
    benchmark::DoNotOptimize(fit_simpson(s, split, ModelKind::GM_SC));
}
BENCHMARK(bm_fit_gm_sc);

void bm_fit_gm_sd(benchmark::State &state) {
  const Series &s = gdp();
  const SplitSpec split{6, 0};
  for (auto _ : state)
    benchmark::DoNotOptimize(fit_simpson(s, split, ModelKind::GM_SD));
}
BENCHMARK(bm_fit_gm_sd);

// The unbiasedness configuration: fit on the first six doubling
// values, restore all twelve.
void bm_fit_restore_doubling(benchmark::State &state) {
  const Series s(doubling_series());
  const SplitSpec split{6, 0};
  for (auto _ : state) {
    const FittedModel m = fit_simpson(s, split, ModelKind::GM_SD);
    benchmark::DoNotOptimize(restored_series(m, 12));
  }
}
BENCHMARK(bm_fit_restore_doubling);

void bm_restore_long_horizon(benchmark::State &state) {
  const FittedModel m =
      fit_simpson(gdp(), SplitSpec{6, 0}, ModelKind::GM_SD);
  for (auto _ : state)
    benchmark::DoNotOptimize(restored_series(m, 60));
}
BENCHMARK(bm_restore_long_horizon);

void bm_run_experiment(benchmark::State &state) {
  const Series &s = gdp();
  const SplitSpec split{6, 0};
  for (auto _ : state)
    benchmark::DoNotOptimize(run_experiment(s, split, all_model_kinds()));
}
BENCHMARK(bm_run_experiment);

void bm_desk_sweep(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(run_desk_sweep());
}
BENCHMARK(bm_desk_sweep)->Unit(benchmark::kMillisecond);

void bm_phi(benchmark::State &state) {
  double a = 0.0;
  for (auto _ : state) {
    a += 1e-6;
    benchmark::DoNotOptimize(phi(a));
  }
}
BENCHMARK(bm_phi);

} // namespace

BENCHMARK_MAIN();
