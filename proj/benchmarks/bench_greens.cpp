#include <benchmark/benchmark.h>

#include "tumorsim/greens.hpp"

namespace {

void BM_BesselK0Series(benchmark::State& state) {
  double x = 0.9;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tumorsim::bessel_k0(x));
  }
}

void BM_BesselK0Tail(benchmark::State& state) {
  double x = 5.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tumorsim::bessel_k0(x));
  }
}

void BM_GreenMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const tumorsim::GridSpec g(n, n, 1.0, 1.0);
  for (auto _ : state) {
    tumorsim::GreenMatrix green = tumorsim::discrete_green_matrix(g, 0.5, 1e-10);
    benchmark::DoNotOptimize(green.entries.data());
  }
  state.SetComplexityN(n);
}

void BM_CorrectorColumn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const tumorsim::GridSpec g(n, n, 1.0, 1.0);
  for (auto _ : state) {
    tumorsim::ScalarField col =
        tumorsim::corrector_green(g, n / 2, n / 2, 0.5, 1e-10);
    benchmark::DoNotOptimize(col.values.data());
  }
  state.SetComplexityN(n);
}

}  // namespace

BENCHMARK(BM_BesselK0Series);
BENCHMARK(BM_BesselK0Tail);
BENCHMARK(BM_GreenMatrix)->Arg(8)->Arg(16)->Complexity();
BENCHMARK(BM_CorrectorColumn)->Arg(32)->Arg(64)->Complexity();
