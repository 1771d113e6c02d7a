#include "tumorsim/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tumorsim {

double cdf(const ScalarField& n, double xi) {
  if (!(xi >= 0.0)) {
    throw std::invalid_argument("cdf: xi must be >= 0");
  }
  std::size_t count = 0;
  for (const double v : n.values) {
    if (v <= xi) ++count;
  }
  return n.grid.hx() * n.grid.hy() * static_cast<double>(count);
}

double grad_lp_functional(const ScalarField& n, int p_exp) {
  if (p_exp < 4 || p_exp % 2 != 0) {
    throw std::invalid_argument("grad_lp_functional: p must be even and >= 4");
  }
  const VectorField g = gradient_centered(n);
  const auto ipow = [p_exp](double v) {
    double acc = 1.0;
    for (int k = 0; k < p_exp; ++k) acc *= v;
    return acc;
  };
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t k = 0; k < g.ux.size(); ++k) {
    const double term = ipow(g.ux[k]) + ipow(g.uy[k]);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return n.grid.hx() * n.grid.hy() * sum;
}

double vacuum_nu(const Params& p) {
  const double target = p.alpha / 4.0;
  const auto lhs = [&](double nu) {
    return p.beta * std::pow(nu, p.gamma_theta()) +
           (p.a / p.mu) * std::pow(nu, p.gamma);
  };
  double lo = 0.0;
  double hi = compute_n_star(p);
  if (lhs(hi) <= target) return hi;  // even n_star satisfies the margin
  for (int it = 0; it < 200 && (hi - lo) > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (lhs(mid) <= target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

namespace {

DiagRow make_row(double t, const ScalarField& n, const ScalarField& W,
                 const Equilibria& eq, double nu) {
  DiagRow row;
  row.t = t;
  double mn = n.values[0], mx = n.values[0];
  for (const double v : n.values) {
    mn = std::min(mn, v);
    mx = std::max(mx, v);
  }
  row.min_n = mn;
  row.max_n = mx;
  ScalarField dist = n;
  for (double& v : dist.values) v = std::fabs(v - eq.n_star);
  row.l1_dist_nstar = integrate(dist);
  row.grad_lp = grad_lp_functional(n, 6);
  row.cdf_zero = cdf(n, kVacuumEps);
  row.cdf_nu = cdf(n, 0.5 * nu);
  double wmn = W.values[0], wmx = W.values[0];
  for (const double v : W.values) {
    wmn = std::min(wmn, v);
    wmx = std::max(wmx, v);
  }
  row.w_min = wmn;
  row.w_max = wmx;
  row.mass = integrate(n);
  return row;
}

ScalarField pressure_rhs(const ScalarField& n, const Params& p) {
  ScalarField f = n;
  for (double& v : f.values) v = p.a * std::pow(std::max(v, 0.0), p.gamma);
  return f;
}

}  // namespace

RunRecord run(const SimConfig& config) {
  config.params.validate();
  RunRecord rec;
  rec.config = config;
  rec.grid = config.grid();
  rec.eq = equilibria_of(config.params);
  rec.nu = vacuum_nu(config.params);

  const Params& p = config.params;
  ScalarField n = initial_condition(config);
  ScalarField W;
  try {
    W = solve_brinkman(pressure_rhs(n, p), p.mu, config.tol).W;
  } catch (const std::exception& e) {
    rec.termination = std::string("elliptic solver failed at t=0: ") + e.what();
    rec.final_n = n;
    rec.final_t = 0.0;
    return rec;
  }

  double t = 0.0;
  long step_index = 0;
  rec.rows.push_back(make_row(t, n, W, rec.eq, rec.nu));
  std::size_t next_snapshot = 0;
  bool last_sampled = true;

  const auto record_frame = [&]() {
    if (!config.record_frames) return;
    rec.has_frames = true;
    rec.frames.times.push_back(t);
    rec.frames.velocities.push_back(velocity(W));
    rec.frames.divergences.push_back(divergence_u(n, W, p));
    rec.frames.densities.push_back(n);
  };
  record_frame();

  while (t < config.t_end - 1e-12 * config.t_end) {
    const VectorField u = velocity(W);
    double dt = cfl_dt(n, u, p, config.cfl);
    dt = std::min(dt, config.t_end - t);
    while (next_snapshot < config.snapshot_times.size() &&
           config.snapshot_times[next_snapshot] <= t + 1e-12) {
      rec.snapshots.emplace_back(t, n);
      ++next_snapshot;
    }
    if (next_snapshot < config.snapshot_times.size()) {
      dt = std::min(dt, config.snapshot_times[next_snapshot] - t);
    }
    if (!(dt > 1e-13)) {
      rec.termination = "dt underflow at t = " + std::to_string(t);
      break;
    }

    ScalarField n_next;
    StepReport report;
    try {
      auto [field, rep] = step(n, W, dt, p);
      n_next = std::move(field);
      report = rep;
    } catch (const std::exception& e) {
      rec.termination = std::string("step failed at t = ") + std::to_string(t) +
                        ": " + e.what();
      break;
    }
    rec.max_clamp = std::max(rec.max_clamp, report.clamp_magnitude);

    double rate = 0.0;
    for (std::size_t k = 0; k < n.values.size(); ++k) {
      rate = std::max(rate, std::fabs(n_next.values[k] - n.values[k]));
    }
    rate /= dt;

    n = std::move(n_next);
    t += dt;
    ++step_index;
    try {
      W = solve_brinkman(pressure_rhs(n, p), p.mu, config.tol, &W).W;
    } catch (const std::exception& e) {
      rec.termination = std::string("elliptic solver failed at t = ") +
                        std::to_string(t) + ": " + e.what();
      break;
    }
    record_frame();

    last_sampled = (step_index % config.sample_every == 0);
    if (last_sampled) {
      rec.rows.push_back(make_row(t, n, W, rec.eq, rec.nu));
    }
    if (rate <= config.steady_tol) {
      rec.termination = "steady";
      break;
    }
  }

  if (rec.termination.empty()) rec.termination = "t_end";
  while (next_snapshot < config.snapshot_times.size() &&
         config.snapshot_times[next_snapshot] <= t + 1e-12) {
    rec.snapshots.emplace_back(t, n);
    ++next_snapshot;
  }
  if (!last_sampled) {
    rec.rows.push_back(make_row(t, n, W, rec.eq, rec.nu));
  }
  rec.steps = step_index;
  rec.final_n = std::move(n);
  rec.final_W = std::move(W);
  rec.final_t = t;
  return rec;
}

DissipationReport check_dissipation(const RunRecord& record, double delta,
                                    double mu_min) {
  DissipationReport rep;
  if (record.rows.empty()) {
    rep.note = "no samples";
    return rep;
  }
  const double initial = record.rows.front().grad_lp;
  const double initial_norm = std::pow(std::max(initial, 0.0), 1.0 / 6.0);
  if (initial_norm >= delta) {
    rep.note = "outside small-data regime: initial grad_lp^(1/6) = " +
               std::to_string(initial_norm) + " >= delta = " +
               std::to_string(delta);
    return rep;
  }
  if (record.config.params.mu < mu_min) {
    rep.note = "outside regime: mu = " + std::to_string(record.config.params.mu) +
               " < " + std::to_string(mu_min);
    return rep;
  }

  double worst = 0.0;
  // Once the functional has decayed 16 orders of magnitude below its initial
  // value, sample-to-sample differences measure rounding dust rather than the
  // functional; exclude such pairs from the monotonicity check.
  const double dust = std::max(initial, 0.0) * 1e-16;
  for (std::size_t k = 0; k + 1 < record.rows.size(); ++k) {
    const double g0 = record.rows[k].grad_lp;
    const double g1 = record.rows[k + 1].grad_lp;
    if (std::max(g0, g1) <= dust) continue;
    const double rel = (g1 - g0) / std::max(g0, 1e-300);
    worst = std::max(worst, rel);
  }
  rep.max_relative_increase = worst;
  rep.observed_decrease =
      record.rows.front().grad_lp - record.rows.back().grad_lp;
  double integral = 0.0;
  for (std::size_t k = 0; k + 1 < record.rows.size(); ++k) {
    integral += 0.5 *
                (record.rows[k].grad_lp + record.rows[k + 1].grad_lp) *
                (record.rows[k + 1].t - record.rows[k].t);
  }
  const Params& p = record.config.params;
  rep.predicted_margin =
      (p.alpha / 8.0) * std::min(p.gamma_theta(), 1.0) * 6.0 * integral;
  rep.status = worst <= 1e-8 ? DissipationReport::Status::monotone
                             : DissipationReport::Status::violation;
  return rep;
}

}  // namespace tumorsim
