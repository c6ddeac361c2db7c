#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "semiq/dynamics.hpp"
#include "semiq/integrator.hpp"
#include "semiq/ordinal.hpp"
#include "semiq/pipeline.hpp"
#include "semiq/quantifiers.hpp"

namespace {

using namespace semiq;

const SystemParams kParams{1.0, 1.0, 1.0, 0.05};

void BM_VectorField(benchmark::State& state) {
  const DynState s = initial_state(0.6, 0.09, +1, kParams);
  for (auto _ : state) {
    benchmark::DoNotOptimize(vector_field(s, kParams));
  }
}
BENCHMARK(BM_VectorField);

void BM_Rk4Step(benchmark::State& state) {
  DynState s = initial_state(0.6, 0.09, +1, kParams);
  for (auto _ : state) {
    s = rk4_step(s, kParams, 1e-3);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_Rk4Step);

void BM_IntegrateUnitTime(benchmark::State& state) {
  const DynState s0 = initial_state(0.6, 0.09, +1, kParams);
  IntegratorConfig cfg;
  cfg.dt_sample = 0.01;
  cfg.n_samples = 101;  // one time unit per iteration at dt = 1e-3
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate(s0, kParams, cfg));
  }
}
BENCHMARK(BM_IntegrateUnitTime);

std::vector<double> noise_series(std::size_t n) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) {
    x = u(rng);
  }
  return v;
}

void BM_OrdinalDistribution(benchmark::State& state) {
  const TimeSeries series{1.0, noise_series(20000)};
  const OrdinalConfig cfg{static_cast<int>(state.range(0)), 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ordinal_distribution(series, cfg));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(series.values.size()));
}
BENCHMARK(BM_OrdinalDistribution)->Arg(3)->Arg(5)->Arg(7);

void BM_Quantify(benchmark::State& state) {
  const TimeSeries series{1.0, noise_series(20000)};
  const OrdinalConfig cfg{5, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(quantify(series, cfg));
  }
}
BENCHMARK(BM_Quantify);

void BM_SweepPoint(benchmark::State& state) {
  SweepConfig cfg;
  cfg.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_point(24.24, Regime::conservative, cfg));
  }
}
BENCHMARK(BM_SweepPoint);

}  // namespace

BENCHMARK_MAIN();
