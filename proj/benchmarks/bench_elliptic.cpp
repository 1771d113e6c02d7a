#include <random>

#include <benchmark/benchmark.h>

#include "tumorsim/elliptic.hpp"

namespace {

tumorsim::ScalarField random_source(const tumorsim::GridSpec& g) {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> dist(0.2, 1.2);
  tumorsim::ScalarField f(g);
  for (double& v : f.values) v = dist(rng);
  return f;
}

void BM_SolveCold(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const tumorsim::GridSpec g(n, n, 1.0, 1.0);
  const tumorsim::ScalarField f = random_source(g);
  for (auto _ : state) {
    tumorsim::EllipticSolve sol = tumorsim::solve_brinkman(f, 10.0, 1e-10);
    benchmark::DoNotOptimize(sol.W.values.data());
  }
  state.SetComplexityN(n);
}

void BM_SolveWarm(benchmark::State& state) {
  // Re-solve with a right-hand side perturbed at the scale of one transport
  // step, starting from the previous solution -- the simulator's inner loop.
  const int n = static_cast<int>(state.range(0));
  const tumorsim::GridSpec g(n, n, 1.0, 1.0);
  tumorsim::ScalarField f = random_source(g);
  tumorsim::ScalarField prev = tumorsim::solve_brinkman(f, 10.0, 1e-10).W;
  for (double& v : f.values) v *= 1.001;
  for (auto _ : state) {
    tumorsim::EllipticSolve sol =
        tumorsim::solve_brinkman(f, 10.0, 1e-10, &prev);
    benchmark::DoNotOptimize(sol.W.values.data());
  }
  state.SetComplexityN(n);
}

void BM_ApplyOperator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const tumorsim::GridSpec g(n, n, 1.0, 1.0);
  const tumorsim::ScalarField f = random_source(g);
  for (auto _ : state) {
    tumorsim::ScalarField out = tumorsim::apply_operator(f, 10.0);
    benchmark::DoNotOptimize(out.values.data());
  }
  state.SetComplexityN(n);
}

}  // namespace

BENCHMARK(BM_SolveCold)->Arg(32)->Arg(64)->Arg(128)->Complexity();
BENCHMARK(BM_SolveWarm)->Arg(32)->Arg(64)->Arg(128)->Complexity();
BENCHMARK(BM_ApplyOperator)->Arg(64)->Arg(256)->Complexity();
