#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "test_helpers.hpp"
#include "tumorsim/kinetics.hpp"

using namespace tumorsim;

namespace {

Params canonical() {
  Params p;
  p.mu = 10.0;
  p.a = 1.0;
  p.gamma = 2.0;
  p.theta = 0.5;
  p.alpha = 1.0;
  p.beta = 1.0;
  return p;
}

}  // namespace

TEST_SUITE("kinetics") {

TEST_CASE("validate names the offending field") {
  Params p = canonical();
  p.alpha = -1.0;
  CHECK(throws_containing<std::invalid_argument>([&] { p.validate(); },
                                                 "alpha"));
  p = canonical();
  p.mu = 0.0;
  CHECK(throws_containing<std::invalid_argument>([&] { p.validate(); }, "mu"));
  p = canonical();
  p.gamma = 0.5;
  CHECK(throws_containing<std::invalid_argument>([&] { p.validate(); },
                                                 "gamma"));
}

TEST_CASE("n_star solves the growth balance") {
  const Params p = canonical();
  const double ns = compute_n_star(p);
  CHECK(ns == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(growth_G(ns, p) == doctest::Approx(0.0).epsilon(1e-13));

  Params q = canonical();
  q.beta = 4.0;  // n_star = (1/4)^(1/1) = 0.25
  CHECK(compute_n_star(q) == doctest::Approx(0.25).epsilon(1e-13));
}

TEST_CASE("eta solves the damped balance and sits below n_star") {
  const Params p = canonical();
  const double eta = compute_eta(p);
  CHECK(eta < compute_n_star(p));
  CHECK(eta > 0.0);
  const double defect = p.alpha - p.beta * std::pow(eta, p.gamma_theta()) -
                        (p.a / p.mu) * std::pow(eta, p.gamma);
  CHECK(std::fabs(defect) < 1e-11);
  CHECK(eta == doctest::Approx(0.9160797831).epsilon(1e-8));

  const Equilibria eq = equilibria_of(p);
  CHECK(eq.n_star == compute_n_star(p));
  CHECK(eq.eta == compute_eta(p));
  CHECK(eq.w_star ==
        doctest::Approx(p.a * std::pow(eq.n_star, p.gamma)).epsilon(1e-14));
}

TEST_CASE("growth terms reject negative density") {
  const Params p = canonical();
  CHECK(growth_G(0.0, p) == doctest::Approx(p.alpha).epsilon(1e-14));
  CHECK(reaction_rhs(0.0, p) == 0.0);
  CHECK_THROWS_AS(growth_G(-0.1, p), std::invalid_argument);
  CHECK_THROWS_AS(reaction_rhs(-0.1, p), std::invalid_argument);
}

TEST_CASE("homogeneous dynamics converge to n_star from either side") {
  const Params p = canonical();
  const double ns = compute_n_star(p);

  const OdeTrace up = solve_homogeneous_ode(0.3, 40.0, 1e-3, p);
  CHECK(std::fabs(up.back() - ns) < 1e-6);
  for (std::size_t k = 1; k < up.values.size(); ++k) {
    CHECK(up.values[k] >= up.values[k - 1] - 1e-14);  // monotone approach
  }

  const OdeTrace down = solve_homogeneous_ode(2.0, 40.0, 1e-3, p);
  CHECK(std::fabs(down.back() - ns) < 1e-6);
  for (std::size_t k = 1; k < down.values.size(); ++k) {
    CHECK(down.values[k] <= down.values[k - 1] + 1e-14);
  }

  const OdeTrace flat = solve_homogeneous_ode(ns, 5.0, 1e-3, p);
  CHECK(std::fabs(flat.back() - ns) < 1e-12);
}

TEST_CASE("comparison dynamics converge to eta from either side") {
  const Params p = canonical();
  const double eta = compute_eta(p);

  const OdeTrace up = solve_comparison_ode(0.1, 60.0, 1e-3, p);
  CHECK(std::fabs(up.back() - eta) < 1e-6);
  for (std::size_t k = 1; k < up.values.size(); ++k) {
    CHECK(up.values[k] >= up.values[k - 1] - 1e-14);
  }

  const OdeTrace down = solve_comparison_ode(1.5, 60.0, 1e-3, p);
  CHECK(std::fabs(down.back() - eta) < 1e-6);
  for (std::size_t k = 1; k < down.values.size(); ++k) {
    CHECK(down.values[k] <= down.values[k - 1] + 1e-14);
  }
}

TEST_CASE("comparison limit sits below the homogeneous limit") {
  const Params p = canonical();
  CHECK(compute_eta(p) < compute_n_star(p));
  // The damped dynamics lose mass to the divergence term, so from identical
  // data the comparison trace stays below the homogeneous trace.
  const OdeTrace hom = solve_homogeneous_ode(0.5, 10.0, 1e-3, p);
  const OdeTrace cmp = solve_comparison_ode(0.5, 10.0, 1e-3, p);
  CHECK(cmp.back() < hom.back());
}

TEST_CASE("integrator converges at fourth order") {
  const Params p = canonical();
  const double fine = solve_homogeneous_ode(0.3, 2.0, 1e-5, p).back();
  const double e1 = std::fabs(solve_homogeneous_ode(0.3, 2.0, 0.02, p).back() - fine);
  const double e2 = std::fabs(solve_homogeneous_ode(0.3, 2.0, 0.01, p).back() - fine);
  CHECK(e2 < e1);
  CHECK(e1 / e2 > 8.0);  // fourth-order: factor ~16 per halving
}

TEST_CASE("ode traces land exactly on t_end") {
  const Params p = canonical();
  const OdeTrace tr = solve_comparison_ode(0.4, 1.05, 0.1, p);
  CHECK(tr.times.back() == doctest::Approx(1.05).epsilon(1e-14));
  CHECK(tr.initial == 0.4);
  CHECK(tr.values.front() == 0.4);
}

}  // TEST_SUITE
