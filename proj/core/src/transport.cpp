#include "tumorsim/transport.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tumorsim {

namespace {

double max_abs_component(const VectorField& u) {
  double m = 0.0;
  for (const double v : u.ux) m = std::max(m, std::fabs(v));
  for (const double v : u.uy) m = std::max(m, std::fabs(v));
  return m;
}

double reaction_lipschitz(const ScalarField& n, const Params& p) {
  double max_n = 0.0;
  for (const double v : n.values) max_n = std::max(max_n, v);
  const double gt = p.gamma_theta();
  return p.alpha + p.beta * (1.0 + gt) * (max_n > 0.0 ? std::pow(max_n, gt) : 0.0);
}

}  // namespace

double cfl_dt(const ScalarField& n, const VectorField& u, const Params& p,
              double cfl) {
  if (!(cfl > 0.0) || cfl > 1.0) {
    throw std::invalid_argument("cfl_dt: cfl must lie in (0, 1]");
  }
  if (!(n.grid == u.grid)) {
    throw std::invalid_argument("cfl_dt: grids must match");
  }
  const double h = std::min(n.grid.hx(), n.grid.hy());
  const double max_u = max_abs_component(u);
  const double lip = reaction_lipschitz(n, p);
  double dt = cfl * h / (max_u + lip * h + 1e-14);
  dt = std::min(dt, 0.5 / lip);
  return dt;
}

ScalarField advect(const ScalarField& n, const VectorField& u, double dt) {
  if (!(n.grid == u.grid)) {
    throw std::invalid_argument("advect: grids must match");
  }
  if (!(dt > 0.0)) {
    throw std::invalid_argument("advect: dt must be positive");
  }
  const GridSpec& g = n.grid;
  const double hx = g.hx();
  const double hy = g.hy();

  // Face CFL guard: the donor-cell update is positivity-preserving and
  // monotone only while each direction moves less than one cell per step.
  double max_face_x = 0.0;
  double max_face_y = 0.0;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i + 1 < g.nx; ++i) {
      max_face_x = std::max(
          max_face_x, std::fabs(0.5 * (u.x_at(i, j) + u.x_at(i + 1, j))));
    }
  }
  for (int j = 0; j + 1 < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      max_face_y = std::max(
          max_face_y, std::fabs(0.5 * (u.y_at(i, j) + u.y_at(i, j + 1))));
    }
  }
  if (dt * (max_face_x / hx + max_face_y / hy) > 1.0 + 1e-12) {
    throw std::invalid_argument(
        "advect: CFL violation, dt * (|ux|/hx + |uy|/hy) = " +
        std::to_string(dt * (max_face_x / hx + max_face_y / hy)));
  }

  ScalarField out = n;
  // x-direction interior faces; boundary faces carry zero flux.
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i + 1 < g.nx; ++i) {
      const double uf = 0.5 * (u.x_at(i, j) + u.x_at(i + 1, j));
      const double flux = uf >= 0.0 ? uf * n.at(i, j) : uf * n.at(i + 1, j);
      out.at(i, j) -= dt / hx * flux;
      out.at(i + 1, j) += dt / hx * flux;
    }
  }
  // y-direction interior faces.
  for (int j = 0; j + 1 < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const double uf = 0.5 * (u.y_at(i, j) + u.y_at(i, j + 1));
      const double flux = uf >= 0.0 ? uf * n.at(i, j) : uf * n.at(i, j + 1);
      out.at(i, j) -= dt / hy * flux;
      out.at(i, j + 1) += dt / hy * flux;
    }
  }
  return out;
}

ScalarField react(const ScalarField& n, double dt, const Params& p) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("react: dt must be positive");
  }
  ScalarField out(n.grid);
  for (std::size_t k = 0; k < n.values.size(); ++k) {
    const double v = n.values[k];
    if (v < 0.0) {
      throw std::invalid_argument("react: negative input value " +
                                  std::to_string(v) + " at flat index " +
                                  std::to_string(k));
    }
    const double k1 = reaction_rhs(v, p);
    const double mid = std::max(v + dt * k1, 0.0);
    const double k2 = reaction_rhs(mid, p);
    out.values[k] = v + 0.5 * dt * (k1 + k2);
  }
  return out;
}

std::pair<ScalarField, StepReport> step(const ScalarField& n,
                                        const ScalarField& W, double dt,
                                        const Params& p) {
  if (!(n.grid == W.grid)) {
    throw std::invalid_argument("step: grids must match");
  }
  StepReport report;
  report.dt_used = dt;
  report.mass_in = integrate(n);

  const VectorField u = velocity(W);
  ScalarField half = react(n, 0.5 * dt, p);
  ScalarField moved = advect(half, u, dt);

  // advect is monotone but its stencil arithmetic can leave round-off
  // negatives; react rejects them, so sanitize in between and account for it.
  double undershoot = 0.0;
  for (double& v : moved.values) {
    if (v < 0.0) {
      undershoot = std::max(undershoot, -v);
      v = 0.0;
    }
  }
  ScalarField out = react(moved, 0.5 * dt, p);

  double min_n = out.values.empty() ? 0.0 : out.values[0];
  double max_n = min_n;
  for (std::size_t k = 0; k < out.values.size(); ++k) {
    const double v = out.values[k];
    if (std::isnan(v)) {
      const int i = static_cast<int>(k) % n.grid.nx;
      const int j = static_cast<int>(k) / n.grid.nx;
      throw std::runtime_error("step: NaN at cell (" + std::to_string(i) +
                               ", " + std::to_string(j) + ")");
    }
    min_n = std::min(min_n, v);
    max_n = std::max(max_n, v);
  }
  report.min_n = min_n;
  report.max_n = max_n;
  for (double& v : out.values) {
    if (v < 0.0) {
      undershoot = std::max(undershoot, -v);
      v = 0.0;
    }
  }
  report.clamp_magnitude = undershoot;
  report.mass_out = integrate(out);
  report.flux_boundary = 0.0;  // boundary faces are closed by construction
  return {std::move(out), report};
}

}  // namespace tumorsim
