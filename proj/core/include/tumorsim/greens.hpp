#pragma once

#include <vector>

#include "tumorsim/grid.hpp"

namespace tumorsim {

// Modified Bessel function of the second kind, order zero. Power series for
// x <= 2, exponentially scaled Chebyshev tail for x > 2; relative error below
// 1e-11 on both branches. Rejects x <= 0.
double bessel_k0(double x);

// Slow reference evaluation of K0 through the integral representation
// K0(x) = integral over t >= 0 of exp(-x cosh t) dt, by composite Simpson
// quadrature on a truncated range; about 1e-13 relative accuracy. Used to
// cross-check bessel_k0 without sharing any code with it.
double bessel_k0_by_quadrature(double x);

// Free-space radial kernel of (-mu lap + I):
//   dim 2:  K0(r / sqrt(mu)) / (2 pi mu)
//   dim 3:  exp(-r / sqrt(mu)) / (4 pi mu r)
// Normalization fixed by the identity
//   integral of (-mu lap phi + phi) Psi(|x|) dx = phi(0)
// which fundamental_normalization_check verifies by quadrature.
// Rejects r <= 0, mu <= 0, dim not in {2, 3}.
double psi_fundamental(double r, double mu, int dim);

// d/dr of psi_fundamental by symmetric difference with step 1e-6 r.
double psi_radial_derivative(double r, double mu, int dim);

// Radial C-infinity bump of compact support:
//   phi(r) = height * exp(1 - 1 / (1 - (r/radius)^2))   for r < radius,
//   phi(r) = 0                                          otherwise,
// so phi(0) = height exactly.
struct BumpSpec {
  double radius = 0.45;
  double height = 1.0;
};

// Evaluates integral over r in (0, radius) of
//   (-mu lap phi + phi)(r) * kernel_scale * Psi(r) * surface(r) dr
// with surface(r) = 2 pi r (dim 2) or 4 pi r^2 (dim 3), using the analytic
// Laplacian of the bump and composite Simpson quadrature, and returns the
// relative defect |I - phi(0)| / |phi(0)|. kernel_scale != 1 deliberately
// misnormalizes the kernel; scale s turns the defect into about |1 - s|.
double fundamental_normalization_check(double mu, int dim, const BumpSpec& phi,
                                       double kernel_scale = 1.0);

// Dense discrete Green matrix for (-mu lap_h + I) with mirrored (zero-flux)
// boundaries. entries[i * N + j] is the value at cell i of the solution with
// source 1/(hx hy) concentrated in cell j, so
//   W(cell i) ~ sum_j at(i, j) f(cell j) hx hy
// reproduces solve_brinkman applied to f. Symmetric up to solver tolerance;
// strictly positive.
struct GreenMatrix {
  GridSpec grid;
  std::vector<double> entries;

  double at(std::size_t i, std::size_t j) const {
    return entries[i * grid.size() + j];
  }

  // Largest |G_ij - G_ji|.
  double max_asymmetry() const;
  double max_entry() const;
  double min_entry() const;
};

// Assembles the matrix column by column (one solve per source cell), in fixed
// order. Guarded to nx * ny <= 4096 because of the dense storage; larger
// problems should call solve_brinkman directly.
GreenMatrix discrete_green_matrix(const GridSpec& grid, double mu, double tol);

// Free-space kernel centered at the source cell, sampled at every cell
// center. The source cell itself uses the mean distance from the center of a
// cell to a uniform point of the same cell, 0.3826 h, in place of r = 0.
ScalarField fundamental_on_grid(const GridSpec& grid, int source_i,
                                int source_j, double mu);

// Boundary-corrected Green column: solves the corrector problem
//   (-mu lap + I) phi = 0,  normal derivative of phi = normal derivative of
//   Psi(|. - y|) on the boundary,
// with the data entering through face terms of the finite-volume rows, and
// returns Psi(|. - y|) - phi. The source cell center must be at least
// 3 max(hx, hy) away from every wall; closer sources are rejected.
ScalarField corrector_green(const GridSpec& grid, int source_i, int source_j,
                            double mu, double tol);

// Minimum of column source_j over cells at distance >= delta from both the
// source cell center and the boundary. Rejects delta that leaves no cell.
double interior_minimum(const GreenMatrix& g, int source_i, int source_j,
                        double delta);

}  // namespace tumorsim
