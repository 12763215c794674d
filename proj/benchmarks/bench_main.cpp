// Microbenchmarks for the hot paths: recurrence builds, scaled evaluation,
// zero extraction, density grids, the S-curve tracer, and the asymptotic
// main term.  Run as: meixner_bench [--benchmark_filter=...]

#include <benchmark/benchmark.h>

#include "meixner/curves.hpp"
#include "meixner/polyeval.hpp"
#include "meixner/scurve.hpp"
#include "meixner/transition.hpp"
#include "meixner/zeros.hpp"

using namespace meixner;

namespace {

const ParamsFirst kPF(1.0, 0.5, 0.25);
const ParamsSecond kPS(1.0, 1.5, 0.5);

void bm_build_stepline_first(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    SteplineSequence seq = build_stepline(kPF, n);
    benchmark::DoNotOptimize(seq.steps.data());
  }
}
BENCHMARK(bm_build_stepline_first)->Arg(50)->Arg(200);

void bm_build_stepline_second(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    SteplineSequence seq = build_stepline(kPS, n);
    benchmark::DoNotOptimize(seq.steps.data());
  }
}
BENCHMARK(bm_build_stepline_second)->Arg(50)->Arg(200);

void bm_eval_scaled(benchmark::State& state) {
  int deg = static_cast<int>(state.range(0));
  SteplineSequence seq = build_stepline(kPS, deg);
  double x = 0.37 * deg;
  for (auto _ : state) {
    std::vector<ScaledValue> v = eval_scaled(seq, x);
    benchmark::DoNotOptimize(v.back().log_abs);
  }
}
BENCHMARK(bm_eval_scaled)->Arg(100)->Arg(400);

void bm_stepline_zeros(benchmark::State& state) {
  SteplineSequence seq = build_stepline(kPF, 40);
  for (auto _ : state) {
    std::vector<double> zs = stepline_zeros(seq, 40);
    benchmark::DoNotOptimize(zs.data());
  }
}
BENCHMARK(bm_stepline_zeros);

void bm_lambda_grid_first(benchmark::State& state) {
  for (auto _ : state) {
    DensityGrid g = lambda_grid_first(kPF);
    benchmark::DoNotOptimize(g.mass);
  }
}
BENCHMARK(bm_lambda_grid_first);

void bm_lambda_grid_second(benchmark::State& state) {
  for (auto _ : state) {
    DensityGrid g = lambda_grid_second(kPS);
    benchmark::DoNotOptimize(g.mass);
  }
}
BENCHMARK(bm_lambda_grid_second);

void bm_phi_first(benchmark::State& state) {
  cplx z(2.0, 1.5);
  for (auto _ : state) {
    std::array<cplx, 3> f = phi_first(kPF, z);
    benchmark::DoNotOptimize(f.data());
  }
}
BENCHMARK(bm_phi_first);

void bm_trace_gamma(benchmark::State& state) {
  for (auto _ : state) {
    GammaTrace gt = trace_gamma(kPF);
    benchmark::DoNotOptimize(gt.mu_mass);
  }
}
BENCHMARK(bm_trace_gamma);

void bm_main_term_second(benchmark::State& state) {
  for (auto _ : state) {
    double m = main_term_second(kPS, -1.0);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(bm_main_term_second);

void bm_discrepancy_second(benchmark::State& state) {
  for (auto _ : state) {
    double d = discrepancy_second(kPS, 50, -1.0);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(bm_discrepancy_second);

}  // namespace

BENCHMARK_MAIN();
