#include "tumorsim/kinetics.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace tumorsim {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string("Params: ") + name +
                                " must be positive finite");
  }
}

// n^q for n >= 0 with the convention 0^q = 0 for every q > 0.
inline double pow_nonneg(double n, double q) {
  return n <= 0.0 ? 0.0 : std::pow(n, q);
}

OdeTrace integrate_rk4(double m, double t_end, double dt,
                       const std::function<double(double)>& rhs,
                       double bound_guard) {
  if (!(m >= 0.0)) {
    throw std::invalid_argument("ODE solve: initial value must be >= 0");
  }
  if (!(dt > 0.0) || !(t_end > 0.0) || dt > t_end) {
    throw std::invalid_argument("ODE solve: need 0 < dt <= t_end");
  }
  OdeTrace trace;
  trace.initial = m;
  trace.times.push_back(0.0);
  trace.values.push_back(m);
  double t = 0.0;
  double n = m;
  while (t < t_end - 1e-15 * t_end) {
    const double h = std::min(dt, t_end - t);
    const double k1 = rhs(n);
    const double k2 = rhs(n + 0.5 * h * k1);
    const double k3 = rhs(n + 0.5 * h * k2);
    const double k4 = rhs(n + h * k3);
    n += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (n < 0.0) n = 0.0;
    t += h;
    if (!std::isfinite(n) || n > bound_guard) {
      throw std::logic_error(
          "ODE solve: value " + std::to_string(n) + " escaped the a priori "
          "bound " + std::to_string(bound_guard) + " at t = " +
          std::to_string(t));
    }
    trace.times.push_back(t);
    trace.values.push_back(n);
  }
  return trace;
}

}  // namespace

void Params::validate() const {
  require_positive(mu, "mu");
  require_positive(a, "a");
  require_positive(theta, "theta");
  require_positive(alpha, "alpha");
  require_positive(beta, "beta");
  if (!(gamma >= 1.0) || !std::isfinite(gamma)) {
    throw std::invalid_argument("Params: gamma must be >= 1");
  }
}

double growth_G(double n, const Params& p) {
  if (!(n >= 0.0)) {
    throw std::invalid_argument("growth_G: n must be >= 0");
  }
  return p.alpha - p.beta * pow_nonneg(n, p.gamma_theta());
}

double reaction_rhs(double n, const Params& p) {
  if (!(n >= 0.0)) {
    throw std::invalid_argument("reaction_rhs: n must be >= 0");
  }
  return n * growth_G(n, p);
}

double compute_n_star(const Params& p) {
  return std::pow(p.alpha / p.beta, 1.0 / p.gamma_theta());
}

double compute_eta(const Params& p) {
  const double n_star = compute_n_star(p);
  const auto residual = [&](double n) {
    return p.alpha - p.beta * pow_nonneg(n, p.gamma_theta()) -
           (p.a / p.mu) * pow_nonneg(n, p.gamma);
  };
  double lo = 0.0;          // residual(0) = alpha > 0
  double hi = n_star;       // residual(n_star) = -(a/mu) n_star^gamma < 0
  if (!(residual(lo) > 0.0) || !(residual(hi) < 0.0)) {
    throw std::logic_error("compute_eta: bisection bracket failed");
  }
  for (int it = 0; it < 200 && (hi - lo) > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (residual(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Equilibria equilibria_of(const Params& p) {
  Equilibria eq;
  eq.n_star = compute_n_star(p);
  eq.eta = compute_eta(p);
  eq.w_star = p.a * std::pow(eq.n_star, p.gamma);
  return eq;
}

double comparison_rhs(double n, const Params& p) {
  const double nn = std::max(n, 0.0);
  return p.alpha * nn - p.beta * pow_nonneg(nn, 1.0 + p.gamma_theta()) -
         (p.a / p.mu) * pow_nonneg(nn, 1.0 + p.gamma);
}

OdeTrace solve_comparison_ode(double m, double t_end, double dt,
                              const Params& p) {
  p.validate();
  const double eta = compute_eta(p);
  const double guard = 2.0 * std::max(m, eta) + 1e-30;
  return integrate_rk4(
      m, t_end, dt, [&](double n) { return comparison_rhs(n, p); }, guard);
}

OdeTrace solve_homogeneous_ode(double m, double t_end, double dt,
                               const Params& p) {
  p.validate();
  const double n_star = compute_n_star(p);
  const double guard = 2.0 * std::max(m, n_star) + 1e-30;
  return integrate_rk4(
      m, t_end, dt,
      [&](double n) {
        const double nn = std::max(n, 0.0);
        return p.alpha * nn - p.beta * pow_nonneg(nn, 1.0 + p.gamma_theta());
      },
      guard);
}

}  // namespace tumorsim
