#pragma once

#include <vector>

#include "tumorsim/grid.hpp"

namespace tumorsim {

// Time-indexed velocity snapshots; linear interpolation between frames,
// bilinear interpolation (clamped at the boundary) within a frame.
struct VelocityFrames {
  GridSpec grid;
  std::vector<double> times;
  std::vector<VectorField> fields;
};

// Time-indexed scalar snapshots with the same interpolation rules.
struct ScalarFrames {
  GridSpec grid;
  std::vector<double> times;
  std::vector<ScalarField> fields;
};

// One characteristic trajectory. det_jac carries det(grad Phi_t) transported
// along the trace; divu_along the sampled divergence. max_clip records the
// largest boundary clipping applied to keep the position inside the closed
// domain; values beyond one cell size indicate an inconsistent field.
struct FlowTrace {
  std::vector<double> times;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> det_jac;
  std::vector<double> divu_along;
  double max_clip = 0.0;
};

// Integrates dx/dt = u(t, x) from x0 over [t0, t1] with midpoint RK2,
// subdividing each frame interval into substeps_per_frame steps. Positions
// are clipped to the closed domain and the clip magnitude is logged.
// Rejects frame sets that do not cover [t0, t1].
FlowTrace advect_point(double x0, double y0, const VelocityFrames& frames,
                       double t0, double t1, int substeps_per_frame = 1);

// Fills det_jac with exp(integral of div u along the trace), the exact
// exponential solution of d(det)/dt = div u * det, using trapezoid
// quadrature over the trace nodes; also fills divu_along.
FlowTrace jacobian_det(FlowTrace trace, const ScalarFrames& divu);

// Measure of the flow image of S = {indicator > 1/2}: seeds one trace per
// indicator cell center and returns hx * hy * sum of final determinants.
double transported_measure(const ScalarField& indicator,
                           const VelocityFrames& frames,
                           const ScalarFrames& divu, double t0, double t1,
                           int substeps_per_frame = 1);

// Samples a frame set at an arbitrary time and position (exposed for tests
// and the particle-cloud oracle).
double sample_scalar(const ScalarFrames& frames, double t, double x, double y);
void sample_velocity(const VelocityFrames& frames, double t, double x,
                     double y, double& ux, double& uy);

}  // namespace tumorsim
