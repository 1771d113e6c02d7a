#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace tumorsim {

// Uniform rectangular cell-centered grid on [0, lx] x [0, ly].
// Cell (i, j) has center ((i + 0.5) hx, (j + 0.5) hy) and flat index j * nx + i
// (row-major: j is the slow index).
//
// A degenerate extent of 1 in one direction is allowed and treated as a 1D
// grid (derivatives in that direction vanish); stencil operations state their
// own minimum extents.
struct GridSpec {
  int nx = 0;
  int ny = 0;
  double lx = 0.0;
  double ly = 0.0;

  GridSpec() = default;
  GridSpec(int nx_, int ny_, double lx_, double ly_);

  double hx() const { return lx / nx; }
  double hy() const { return ly / ny; }
  double cell_x(int i) const { return (i + 0.5) * hx(); }
  double cell_y(int j) const { return (j + 0.5) * hy(); }
  double measure() const { return lx * ly; }
  std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(j) * nx + i;
  }

  bool operator==(const GridSpec&) const = default;
};

// Cell-centered real field; one value per cell, row-major.
struct ScalarField {
  GridSpec grid;
  std::vector<double> values;

  ScalarField() = default;
  explicit ScalarField(const GridSpec& g) : grid(g), values(g.size(), 0.0) {}

  double& at(int i, int j) { return values[grid.idx(i, j)]; }
  double at(int i, int j) const { return values[grid.idx(i, j)]; }
};

// Cell-centered vector field with components (ux, uy).
struct VectorField {
  GridSpec grid;
  std::vector<double> ux;
  std::vector<double> uy;

  VectorField() = default;
  explicit VectorField(const GridSpec& g)
      : grid(g), ux(g.size(), 0.0), uy(g.size(), 0.0) {}

  double& x_at(int i, int j) { return ux[grid.idx(i, j)]; }
  double x_at(int i, int j) const { return ux[grid.idx(i, j)]; }
  double& y_at(int i, int j) { return uy[grid.idx(i, j)]; }
  double y_at(int i, int j) const { return uy[grid.idx(i, j)]; }
};

// Samples f at every cell center. Rejects non-finite samples, naming the cell.
ScalarField field_from_fn(const GridSpec& grid,
                          const std::function<double(double, double)>& f);

// Midpoint-rule integral over the domain: hx * hy * sum(values),
// compensated summation so the result is independent of magnitude spread.
double integrate(const ScalarField& field);

// (integral of |field|^q)^(1/q) by the midpoint rule. Requires q >= 1.
double lq_norm(const ScalarField& field, double q);

// Componentwise derivative approximation: second-order central differences in
// the interior, one-sided second-order at the boundary. A direction with a
// single cell gets a zero component; two cells are rejected (no second-order
// formula exists).
VectorField gradient_centered(const ScalarField& field);

}  // namespace tumorsim
