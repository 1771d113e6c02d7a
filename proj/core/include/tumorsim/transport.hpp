#pragma once

#include <utility>

#include "tumorsim/elliptic.hpp"
#include "tumorsim/grid.hpp"
#include "tumorsim/kinetics.hpp"

namespace tumorsim {

// Per-step diagnostic record.
//   min_n / max_n   : extrema of the returned field before negative clamping
//   mass_in/out     : integral of n before/after the step
//   flux_boundary   : net boundary flux (0 exactly: boundary faces are closed)
//   clamp_magnitude : largest negative undershoot that was clamped to 0
struct StepReport {
  double dt_used = 0.0;
  double min_n = 0.0;
  double max_n = 0.0;
  double mass_in = 0.0;
  double mass_out = 0.0;
  double flux_boundary = 0.0;
  double clamp_magnitude = 0.0;
};

// Stable explicit step size:
//   cfl * min(hx,hy) / (max|u| + L * min(hx,hy) + 1e-14)
// where L = alpha + beta (1+gamma theta) max(n)^(gamma theta) is the reaction
// Lipschitz bound, additionally capped at 0.5 / L so the reaction substep is
// contractive (and positivity-preserving).
double cfl_dt(const ScalarField& n, const VectorField& u, const Params& p,
              double cfl);

// Conservative first-order donor-cell upwind update of dn/dt + div(n u) = 0.
// Face velocities are arithmetic means of the adjacent cell-center values;
// boundary faces carry zero flux, so the integral of n is conserved to
// round-off and nonnegativity is preserved under the cfl_dt step bound.
// Rejects dt that violates the face CFL condition.
ScalarField advect(const ScalarField& n, const VectorField& u, double dt);

// One Heun (RK2) substep of dn/dt = n G(n) per cell. Rejects negative input.
ScalarField react(const ScalarField& n, double dt, const Params& p);

// Strang-split full step: react dt/2, advect dt with u = velocity(W),
// react dt/2. Negative round-off values are clamped to zero; the largest
// clamped magnitude is reported (anything beyond 1e-12 indicates a scheme
// bug, not round-off). NaN aborts with the offending cell index.
std::pair<ScalarField, StepReport> step(const ScalarField& n,
                                        const ScalarField& W, double dt,
                                        const Params& p);

}  // namespace tumorsim
