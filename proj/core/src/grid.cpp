#include "tumorsim/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tumorsim {

GridSpec::GridSpec(int nx_, int ny_, double lx_, double ly_)
    : nx(nx_), ny(ny_), lx(lx_), ly(ly_) {
  if (nx < 1 || ny < 1) {
    throw std::invalid_argument("GridSpec: nx and ny must be >= 1");
  }
  if (!(lx > 0.0) || !(ly > 0.0) || !std::isfinite(lx) || !std::isfinite(ly)) {
    throw std::invalid_argument("GridSpec: lx and ly must be positive finite");
  }
}

ScalarField field_from_fn(const GridSpec& grid,
                          const std::function<double(double, double)>& f) {
  ScalarField out(grid);
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const double v = f(grid.cell_x(i), grid.cell_y(j));
      if (!std::isfinite(v)) {
        throw std::domain_error("field_from_fn: non-finite sample at cell (" +
                                std::to_string(i) + ", " + std::to_string(j) +
                                ")");
      }
      out.at(i, j) = v;
    }
  }
  return out;
}

double integrate(const ScalarField& field) {
  double sum = 0.0;
  double comp = 0.0;
  for (const double v : field.values) {
    const double y = v - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return field.grid.hx() * field.grid.hy() * sum;
}

double lq_norm(const ScalarField& field, double q) {
  if (!(q >= 1.0)) {
    throw std::invalid_argument("lq_norm: q must be >= 1");
  }
  double sum = 0.0;
  double comp = 0.0;
  for (const double v : field.values) {
    const double term = std::pow(std::fabs(v), q);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return std::pow(field.grid.hx() * field.grid.hy() * sum, 1.0 / q);
}

namespace {

// One-dimensional derivative along a line of values addressed through
// stride-aware accessors; second-order one-sided stencils at the ends,
// written as combinations of differences so constant fields give exactly
// zero regardless of their magnitude.
inline double deriv_interior(double fm, double fp, double h) {
  return (fp - fm) / (2.0 * h);
}
inline double deriv_left(double f0, double f1, double f2, double h) {
  return (4.0 * (f1 - f0) - (f2 - f0)) / (2.0 * h);
}
inline double deriv_right(double fn1, double fn2, double fn3, double h) {
  return (4.0 * (fn1 - fn2) - (fn1 - fn3)) / (2.0 * h);
}

}  // namespace

VectorField gradient_centered(const ScalarField& field) {
  const GridSpec& g = field.grid;
  if (g.nx == 2 || g.ny == 2) {
    throw std::invalid_argument(
        "gradient_centered: directions with exactly 2 cells are not supported "
        "(need >= 3 for second-order one-sided stencils)");
  }
  VectorField out(g);
  const double hx = g.hx();
  const double hy = g.hy();

  if (g.nx >= 3) {
    for (int j = 0; j < g.ny; ++j) {
      out.x_at(0, j) =
          deriv_left(field.at(0, j), field.at(1, j), field.at(2, j), hx);
      for (int i = 1; i < g.nx - 1; ++i) {
        out.x_at(i, j) = deriv_interior(field.at(i - 1, j), field.at(i + 1, j), hx);
      }
      out.x_at(g.nx - 1, j) =
          deriv_right(field.at(g.nx - 1, j), field.at(g.nx - 2, j),
                      field.at(g.nx - 3, j), hx);
    }
  }
  if (g.ny >= 3) {
    for (int i = 0; i < g.nx; ++i) {
      out.y_at(i, 0) =
          deriv_left(field.at(i, 0), field.at(i, 1), field.at(i, 2), hy);
      for (int j = 1; j < g.ny - 1; ++j) {
        out.y_at(i, j) = deriv_interior(field.at(i, j - 1), field.at(i, j + 1), hy);
      }
      out.y_at(i, g.ny - 1) =
          deriv_right(field.at(i, g.ny - 1), field.at(i, g.ny - 2),
                      field.at(i, g.ny - 3), hy);
    }
  }
  return out;
}

}  // namespace tumorsim
