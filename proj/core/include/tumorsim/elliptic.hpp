#pragma once

#include "tumorsim/grid.hpp"
#include "tumorsim/kinetics.hpp"

namespace tumorsim {

// Result of a Brinkman solve. residual_norm is the relative l2 residual
// ||b - A W|| / ||b|| actually achieved.
struct EllipticSolve {
  ScalarField W;
  int iterations = 0;
  double residual_norm = 0.0;
};

// Applies -mu lap_h + I with the 5-point Laplacian and mirrored ghost cells
// (homogeneous Neumann). Symmetric and monotone; constants are fixed points.
ScalarField apply_operator(const ScalarField& W, double mu);

// Conjugate-gradient solve of (-mu lap_h + I) W = f to relative l2 residual
// <= tol. The identity term makes the operator symmetric positive definite,
// so no compatibility condition is needed. Deterministic; optional warm start.
// Throws std::runtime_error with the achieved residual if the iteration cap
// (10 nx ny) is exceeded.
EllipticSolve solve_brinkman(const ScalarField& f, double mu,
                             double tol = 1e-10,
                             const ScalarField* warm_start = nullptr);

// Pointwise (a n^gamma - W) / mu, the divergence of u = -grad W under the
// elliptic law. Negative wherever W exceeds the local pressure a n^gamma.
ScalarField divergence_u(const ScalarField& n, const ScalarField& W,
                         const Params& p);

// u = -gradient_centered(W), with the boundary-normal component forced to 0
// on boundary cells (consistent with the homogeneous Neumann condition).
VectorField velocity(const ScalarField& W);

}  // namespace tumorsim
