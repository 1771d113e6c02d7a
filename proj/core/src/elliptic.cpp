#include "tumorsim/elliptic.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace tumorsim {

namespace {

// out = (-mu lap_h + I) v with mirrored ghost cells, raw-buffer version so the
// CG loop allocates nothing per iteration.
void apply_raw(const GridSpec& g, double mu, const std::vector<double>& v,
               std::vector<double>& out) {
  const int nx = g.nx;
  const int ny = g.ny;
  const double ihx2 = 1.0 / (g.hx() * g.hx());
  const double ihy2 = 1.0 / (g.hy() * g.hy());
  for (int j = 0; j < ny; ++j) {
    const std::size_t row = static_cast<std::size_t>(j) * nx;
    for (int i = 0; i < nx; ++i) {
      const std::size_t c = row + i;
      const double vc = v[c];
      const double vw = (i > 0) ? v[c - 1] : vc;
      const double ve = (i < nx - 1) ? v[c + 1] : vc;
      const double vs = (j > 0) ? v[c - nx] : vc;
      const double vn = (j < ny - 1) ? v[c + nx] : vc;
      const double lap = (vw + ve - 2.0 * vc) * ihx2 + (vs + vn - 2.0 * vc) * ihy2;
      out[c] = -mu * lap + vc;
    }
  }
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double y = a[k] * b[k] - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

std::string fmt_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

}  // namespace

ScalarField apply_operator(const ScalarField& W, double mu) {
  if (!(mu > 0.0)) {
    throw std::invalid_argument("apply_operator: mu must be positive");
  }
  ScalarField out(W.grid);
  apply_raw(W.grid, mu, W.values, out.values);
  return out;
}

EllipticSolve solve_brinkman(const ScalarField& f, double mu, double tol,
                             const ScalarField* warm_start) {
  if (!(mu > 0.0)) {
    throw std::invalid_argument("solve_brinkman: mu must be positive");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("solve_brinkman: tol must be positive");
  }
  const GridSpec& g = f.grid;
  const std::size_t n = g.size();
  const std::vector<double>& b = f.values;

  EllipticSolve result;
  result.W = ScalarField(g);
  std::vector<double>& x = result.W.values;

  const double bnorm = std::sqrt(dot(b, b));
  if (bnorm == 0.0) {
    return result;  // exact zero solution
  }

  std::vector<double> r(n), p(n), ap(n);
  if (warm_start != nullptr && warm_start->grid == g) {
    x = warm_start->values;
    apply_raw(g, mu, x, ap);
    for (std::size_t k = 0; k < n; ++k) r[k] = b[k] - ap[k];
  } else {
    std::fill(x.begin(), x.end(), 0.0);
    r = b;
  }
  p = r;
  double rs = dot(r, r);

  const long cap = 10L * g.nx * g.ny;
  long it = 0;
  double prev_confirm = std::numeric_limits<double>::infinity();
  bool floor_reached = false;
  while (it < cap) {
    if (std::sqrt(rs) <= tol * bnorm) {
      // Recurrence says converged; confirm against the true residual, which
      // can drift from the recurrence at tight tolerances.
      apply_raw(g, mu, x, ap);
      for (std::size_t k = 0; k < n; ++k) r[k] = b[k] - ap[k];
      rs = dot(r, r);
      const double true_rel = std::sqrt(rs) / bnorm;
      if (true_rel <= tol) break;
      if (true_rel > 0.9 * prev_confirm && true_rel <= 1e-8) {
        // The true residual stopped improving between restarts: the iterate
        // sits at the rounding floor for this operator, below which no
        // tolerance is attainable in double precision. Accept it and report
        // the achieved residual honestly.
        floor_reached = true;
        break;
      }
      prev_confirm = std::min(prev_confirm, true_rel);
      p = r;  // restart with the true residual
    }
    apply_raw(g, mu, p, ap);
    const double p_ap = dot(p, ap);
    if (!(p_ap > 0.0)) {
      throw std::runtime_error("solve_brinkman: CG breakdown, p.Ap = " +
                               fmt_sci(p_ap));
    }
    const double alpha = rs / p_ap;
    for (std::size_t k = 0; k < n; ++k) x[k] += alpha * p[k];
    ++it;
    if (it % 256 == 0) {
      apply_raw(g, mu, x, ap);
      for (std::size_t k = 0; k < n; ++k) r[k] = b[k] - ap[k];
    } else {
      for (std::size_t k = 0; k < n; ++k) r[k] -= alpha * ap[k];
    }
    const double rs_new = dot(r, r);
    if (it % 256 == 0) {
      // The refresh pins the recurrence to the true residual, so a tolerance
      // below the rounding floor would otherwise never trigger the
      // confirmation path; run the same stagnation test here.
      const double true_rel = std::sqrt(rs_new) / bnorm;
      if (true_rel <= tol) {
        rs = rs_new;
        break;
      }
      if (true_rel > 0.9 * prev_confirm && true_rel <= 1e-8) {
        floor_reached = true;
        rs = rs_new;
        break;
      }
      prev_confirm = std::min(prev_confirm, true_rel);
    }
    const double beta = rs_new / rs;
    for (std::size_t k = 0; k < n; ++k) p[k] = r[k] + beta * p[k];
    rs = rs_new;
  }
  result.iterations = static_cast<int>(it);
  result.residual_norm = std::sqrt(rs) / bnorm;
  if (!floor_reached && result.residual_norm > tol) {
    throw std::runtime_error(
        "solve_brinkman: iteration cap " + std::to_string(cap) +
        " exceeded, relative residual " + fmt_sci(result.residual_norm));
  }
  return result;
}

ScalarField divergence_u(const ScalarField& n, const ScalarField& W,
                         const Params& p) {
  if (!(n.grid == W.grid)) {
    throw std::invalid_argument("divergence_u: grids must match");
  }
  ScalarField out(n.grid);
  for (std::size_t k = 0; k < out.values.size(); ++k) {
    const double nv = std::max(n.values[k], 0.0);
    out.values[k] = (p.a * std::pow(nv, p.gamma) - W.values[k]) / p.mu;
  }
  return out;
}

VectorField velocity(const ScalarField& W) {
  VectorField u = gradient_centered(W);
  for (double& v : u.ux) v = -v;
  for (double& v : u.uy) v = -v;
  const GridSpec& g = W.grid;
  for (int j = 0; j < g.ny; ++j) {
    u.x_at(0, j) = 0.0;
    u.x_at(g.nx - 1, j) = 0.0;
  }
  for (int i = 0; i < g.nx; ++i) {
    u.y_at(i, 0) = 0.0;
    u.y_at(i, g.ny - 1) = 0.0;
  }
  return u;
}

}  // namespace tumorsim
