#pragma once

#include <vector>

namespace tumorsim {

// Model constants of the coupled system
//   dn/dt - div(n grad W) = alpha n - beta n^(1+gamma*theta)
//   -mu lap W + W = a n^gamma
struct Params {
  double mu = 1.0;     // elliptic screening coefficient
  double a = 1.0;      // pressure constant
  double gamma = 1.0;  // adiabatic exponent, >= 1
  double theta = 1.0;  // death-term exponent factor
  double alpha = 1.0;  // growth rate
  double beta = 1.0;   // death rate

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
  double gamma_theta() const { return gamma * theta; }

  bool operator==(const Params&) const = default;
};

// Derived equilibrium values.
//   n_star: root of alpha - beta n^(gamma theta)      (homeostatic density)
//   eta:    root of alpha - beta n^(gamma theta) - (a/mu) n^gamma
//   w_star: a * n_star^gamma
struct Equilibria {
  double n_star = 0.0;
  double eta = 0.0;
  double w_star = 0.0;
};

// Time series of a scalar ODE solve.
struct OdeTrace {
  std::vector<double> times;
  std::vector<double> values;
  double initial = 0.0;

  double back() const { return values.back(); }
};

// G(n) = alpha - beta n^(gamma*theta). Rejects n < 0.
double growth_G(double n, const Params& p);

// n * G(n), the source term of the density equation. Rejects n < 0.
double reaction_rhs(double n, const Params& p);

// (alpha/beta)^(1/(gamma*theta)).
double compute_n_star(const Params& p);

// Unique positive root of alpha - beta n^(gamma theta) - (a/mu) n^gamma,
// found by bisection on [0, n_star] to absolute tolerance 1e-13.
double compute_eta(const Params& p);

Equilibria equilibria_of(const Params& p);

// Right-hand side of the lower comparison dynamics:
//   alpha n - beta n^(1+gamma theta) - (a/mu) n^(1+gamma).
double comparison_rhs(double n, const Params& p);

// Fixed-step classical RK4 for the comparison ODE from n(0) = m; the last
// step is clipped to land exactly on t_end. Values are a priori bounded by
// max(m, eta); exceeding twice that bound aborts (integrator bug guard).
OdeTrace solve_comparison_ode(double m, double t_end, double dt,
                              const Params& p);

// Same integrator for the spatially uniform coupled dynamics
//   dn/dt = alpha n - beta n^(1+gamma theta),
// which is what a constant-in-space state follows (its potential is exactly
// a n^gamma, so the divergence coupling vanishes). Equilibrium n_star.
OdeTrace solve_homogeneous_ode(double m, double t_end, double dt,
                               const Params& p);

}  // namespace tumorsim
