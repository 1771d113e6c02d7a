#include <random>

#include <benchmark/benchmark.h>

#include "tumorsim/elliptic.hpp"
#include "tumorsim/transport.hpp"

namespace {

tumorsim::Params canonical() {
  tumorsim::Params p;
  p.mu = 10.0;
  p.a = 1.0;
  p.gamma = 2.0;
  p.theta = 0.5;
  p.alpha = 1.0;
  p.beta = 1.0;
  return p;
}

void BM_FullStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const tumorsim::GridSpec g(n, n, 1.0, 1.0);
  const tumorsim::Params p = canonical();
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(0.3, 1.2);
  tumorsim::ScalarField density(g);
  for (double& v : density.values) v = dist(rng);
  tumorsim::ScalarField f(g);
  for (std::size_t k = 0; k < f.values.size(); ++k) {
    f.values[k] = p.a * density.values[k] * density.values[k];
  }
  const tumorsim::ScalarField W = tumorsim::solve_brinkman(f, p.mu, 1e-10).W;
  const tumorsim::VectorField u = tumorsim::velocity(W);
  const double dt = tumorsim::cfl_dt(density, u, p, 0.45);
  for (auto _ : state) {
    auto [out, report] = tumorsim::step(density, W, dt, p);
    benchmark::DoNotOptimize(out.values.data());
    benchmark::DoNotOptimize(&report);
  }
  state.SetComplexityN(n);
}

void BM_AdvectOnly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const tumorsim::GridSpec g(n, n, 1.0, 1.0);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  tumorsim::ScalarField density(g);
  for (double& v : density.values) v = dist(rng);
  tumorsim::VectorField u(g);
  for (double& v : u.ux) v = 0.25;
  const double dt = 0.2 * g.hx();
  for (auto _ : state) {
    tumorsim::ScalarField out = tumorsim::advect(density, u, dt);
    benchmark::DoNotOptimize(out.values.data());
  }
  state.SetComplexityN(n);
}

}  // namespace

BENCHMARK(BM_FullStep)->Arg(64)->Arg(128)->Complexity();
BENCHMARK(BM_AdvectOnly)->Arg(64)->Arg(256)->Complexity();
