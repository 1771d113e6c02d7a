#include "tumorsim/flowmap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tumorsim {

namespace {

// Bilinear weights on the cell-center lattice with clamped extension past the
// outermost centers (keeps the interpolant Lipschitz up to the wall).
struct BilinearStencil {
  int i0, j0;
  double fx, fy;
};

BilinearStencil stencil_at(const GridSpec& g, double x, double y) {
  BilinearStencil s;
  const double sx = x / g.hx() - 0.5;
  const double sy = y / g.hy() - 0.5;
  double i0f = std::floor(sx);
  double j0f = std::floor(sy);
  s.fx = sx - i0f;
  s.fy = sy - j0f;
  s.i0 = static_cast<int>(i0f);
  s.j0 = static_cast<int>(j0f);
  if (s.i0 < 0) {
    s.i0 = 0;
    s.fx = 0.0;
  }
  if (s.i0 > g.nx - 2) {
    s.i0 = std::max(g.nx - 2, 0);
    s.fx = g.nx > 1 ? 1.0 : 0.0;
  }
  if (s.j0 < 0) {
    s.j0 = 0;
    s.fy = 0.0;
  }
  if (s.j0 > g.ny - 2) {
    s.j0 = std::max(g.ny - 2, 0);
    s.fy = g.ny > 1 ? 1.0 : 0.0;
  }
  return s;
}

double bilinear(const GridSpec& g, const std::vector<double>& v, double x,
                double y) {
  const BilinearStencil s = stencil_at(g, x, y);
  const int i1 = std::min(s.i0 + 1, g.nx - 1);
  const int j1 = std::min(s.j0 + 1, g.ny - 1);
  const double v00 = v[g.idx(s.i0, s.j0)];
  const double v10 = v[g.idx(i1, s.j0)];
  const double v01 = v[g.idx(s.i0, j1)];
  const double v11 = v[g.idx(i1, j1)];
  return (1.0 - s.fy) * ((1.0 - s.fx) * v00 + s.fx * v10) +
         s.fy * ((1.0 - s.fx) * v01 + s.fx * v11);
}

template <class Frames>
void check_cover(const Frames& frames, double t0, double t1) {
  if (frames.times.empty() || frames.times.size() != frames.fields.size()) {
    throw std::invalid_argument("flowmap: malformed frame set");
  }
  for (std::size_t k = 0; k + 1 < frames.times.size(); ++k) {
    if (!(frames.times[k] < frames.times[k + 1])) {
      throw std::invalid_argument("flowmap: frame times must increase");
    }
  }
  if (frames.times.size() == 1) return;  // steady field, covers all times
  const double eps = 1e-9 * (1.0 + std::fabs(t1));
  if (t0 < frames.times.front() - eps || t1 > frames.times.back() + eps) {
    throw std::invalid_argument(
        "flowmap: frames cover [" + std::to_string(frames.times.front()) +
        ", " + std::to_string(frames.times.back()) + "] but [" +
        std::to_string(t0) + ", " + std::to_string(t1) + "] was requested");
  }
}

// Index of the frame interval containing time t.  Callers guarantee at least
// two frames.
template <class Frames>
std::size_t interval_of(const Frames& frames, double t) {
  const auto it =
      std::upper_bound(frames.times.begin(), frames.times.end(), t);
  std::size_t k = static_cast<std::size_t>(it - frames.times.begin());
  if (k > 0) --k;
  return std::min(k, frames.times.size() - 2);
}

}  // namespace

void sample_velocity(const VelocityFrames& frames, double t, double x,
                     double y, double& ux, double& uy) {
  if (frames.times.size() == 1) {
    ux = bilinear(frames.grid, frames.fields[0].ux, x, y);
    uy = bilinear(frames.grid, frames.fields[0].uy, x, y);
    return;
  }
  const std::size_t k = interval_of(frames, t);
  const double ta = frames.times[k];
  const double tb = frames.times[k + 1];
  double w = (t - ta) / (tb - ta);
  w = std::clamp(w, 0.0, 1.0);
  const double uxa = bilinear(frames.grid, frames.fields[k].ux, x, y);
  const double uxb = bilinear(frames.grid, frames.fields[k + 1].ux, x, y);
  const double uya = bilinear(frames.grid, frames.fields[k].uy, x, y);
  const double uyb = bilinear(frames.grid, frames.fields[k + 1].uy, x, y);
  ux = (1.0 - w) * uxa + w * uxb;
  uy = (1.0 - w) * uya + w * uyb;
}

double sample_scalar(const ScalarFrames& frames, double t, double x,
                     double y) {
  if (frames.times.size() == 1) {
    return bilinear(frames.grid, frames.fields[0].values, x, y);
  }
  const std::size_t k = interval_of(frames, t);
  const double ta = frames.times[k];
  const double tb = frames.times[k + 1];
  double w = (t - ta) / (tb - ta);
  w = std::clamp(w, 0.0, 1.0);
  const double va = bilinear(frames.grid, frames.fields[k].values, x, y);
  const double vb = bilinear(frames.grid, frames.fields[k + 1].values, x, y);
  return (1.0 - w) * va + w * vb;
}

FlowTrace advect_point(double x0, double y0, const VelocityFrames& frames,
                       double t0, double t1, int substeps_per_frame) {
  if (!(t0 <= t1)) {
    throw std::invalid_argument("advect_point: need t0 <= t1");
  }
  if (substeps_per_frame < 1) {
    throw std::invalid_argument("advect_point: substeps_per_frame must be >= 1");
  }
  check_cover(frames, t0, t1);
  const GridSpec& g = frames.grid;

  FlowTrace trace;
  double x = x0;
  double y = y0;
  double t = t0;
  trace.times.push_back(t);
  trace.x.push_back(x);
  trace.y.push_back(y);

  const auto clip = [&](double& px, double& py) {
    const double cx = std::clamp(px, 0.0, g.lx);
    const double cy = std::clamp(py, 0.0, g.ly);
    trace.max_clip = std::max({trace.max_clip, std::fabs(cx - px),
                               std::fabs(cy - py)});
    px = cx;
    py = cy;
  };
  clip(x, y);

  // Step nodes: every frame time inside (t0, t1), each interval subdivided.
  std::vector<double> nodes{t0};
  for (std::size_t k = 0; k < frames.times.size(); ++k) {
    const double ft = frames.times[k];
    if (ft > t0 + 1e-14 && ft < t1 - 1e-14) nodes.push_back(ft);
  }
  nodes.push_back(t1);
  std::sort(nodes.begin(), nodes.end());

  for (std::size_t seg = 0; seg + 1 < nodes.size(); ++seg) {
    const double ta = nodes[seg];
    const double tb = nodes[seg + 1];
    const double h = (tb - ta) / substeps_per_frame;
    if (!(h > 0.0)) continue;
    for (int s = 0; s < substeps_per_frame; ++s) {
      const double ts = ta + s * h;
      double ux, uy;
      sample_velocity(frames, ts, x, y, ux, uy);
      double xm = x + 0.5 * h * ux;
      double ym = y + 0.5 * h * uy;
      clip(xm, ym);
      sample_velocity(frames, ts + 0.5 * h, xm, ym, ux, uy);
      x += h * ux;
      y += h * uy;
      clip(x, y);
      t = (s + 1 == substeps_per_frame) ? tb : ts + h;
      trace.times.push_back(t);
      trace.x.push_back(x);
      trace.y.push_back(y);
    }
  }
  trace.det_jac.assign(trace.times.size(), 1.0);
  trace.divu_along.assign(trace.times.size(), 0.0);
  return trace;
}

FlowTrace jacobian_det(FlowTrace trace, const ScalarFrames& divu) {
  if (trace.times.empty()) {
    throw std::invalid_argument("jacobian_det: empty trace");
  }
  check_cover(divu, trace.times.front(), trace.times.back());
  trace.det_jac.assign(trace.times.size(), 1.0);
  trace.divu_along.assign(trace.times.size(), 0.0);
  trace.divu_along[0] =
      sample_scalar(divu, trace.times[0], trace.x[0], trace.y[0]);
  double integral = 0.0;
  for (std::size_t k = 1; k < trace.times.size(); ++k) {
    trace.divu_along[k] =
        sample_scalar(divu, trace.times[k], trace.x[k], trace.y[k]);
    integral += 0.5 * (trace.divu_along[k - 1] + trace.divu_along[k]) *
                (trace.times[k] - trace.times[k - 1]);
    trace.det_jac[k] = std::exp(integral);
  }
  return trace;
}

double transported_measure(const ScalarField& indicator,
                           const VelocityFrames& frames,
                           const ScalarFrames& divu, double t0, double t1,
                           int substeps_per_frame) {
  const GridSpec& g = indicator.grid;
  double sum = 0.0;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      if (indicator.at(i, j) > 0.5) {
        FlowTrace trace = advect_point(g.cell_x(i), g.cell_y(j), frames, t0,
                                       t1, substeps_per_frame);
        trace = jacobian_det(std::move(trace), divu);
        sum += trace.det_jac.back();
      }
    }
  }
  return g.hx() * g.hy() * sum;
}

}  // namespace tumorsim
