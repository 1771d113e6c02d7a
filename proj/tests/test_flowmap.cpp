#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "tumorsim/flowmap.hpp"

using namespace tumorsim;

namespace {

// Steady velocity frames holding u(x, y) = (fx(x,y), fy(x,y)).
VelocityFrames steady_field(const GridSpec& g,
                            double (*fx)(double, double),
                            double (*fy)(double, double)) {
  VelocityFrames frames;
  frames.grid = g;
  frames.times = {0.0};
  VectorField u(g);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      u.x_at(i, j) = fx(g.cell_x(i), g.cell_y(j));
      u.y_at(i, j) = fy(g.cell_x(i), g.cell_y(j));
    }
  }
  frames.fields = {u};
  return frames;
}

ScalarFrames steady_scalar(const GridSpec& g, double (*f)(double, double)) {
  ScalarFrames frames;
  frames.grid = g;
  frames.times = {0.0};
  ScalarField s(g);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      s.at(i, j) = f(g.cell_x(i), g.cell_y(j));
    }
  }
  frames.fields = {s};
  return frames;
}

double zero_fn(double, double) { return 0.0; }
double one_fn(double, double) { return 1.0; }
double coord_x(double x, double) { return 0.05 * x; }
double coord_y(double, double y) { return 0.05 * y; }
double div_const(double, double) { return 0.1; }

}  // namespace

TEST_SUITE("flowmap") {

TEST_CASE("bilinear sampling reproduces affine fields between centers") {
  const GridSpec g(16, 16, 1.0, 1.0);
  ScalarFrames frames;
  frames.grid = g;
  frames.times = {0.0};
  ScalarField s(g);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      s.at(i, j) = 2.0 + 3.0 * g.cell_x(i) - g.cell_y(j);
    }
  }
  frames.fields = {s};
  // Points inside the cell-center hull, where bilinear affine is exact.
  for (double x : {0.1, 0.37, 0.7}) {
    for (double y : {0.2, 0.55, 0.9}) {
      CHECK(sample_scalar(frames, 5.0, x, y) ==
            doctest::Approx(2.0 + 3.0 * x - y).epsilon(1e-12));
    }
  }
  // Outside the domain the sample clamps to the boundary value.
  CHECK(sample_scalar(frames, 0.0, -1.0, 0.5) ==
        doctest::Approx(2.0 + 3.0 * g.cell_x(0) - 0.5).epsilon(1e-12));
}

TEST_CASE("two frames blend linearly in time") {
  const GridSpec g(4, 4, 1.0, 1.0);
  ScalarFrames frames;
  frames.grid = g;
  frames.times = {0.0, 1.0};
  ScalarField lo(g), hi(g);
  for (double& v : lo.values) v = 1.0;
  for (double& v : hi.values) v = 3.0;
  frames.fields = {lo, hi};
  CHECK(sample_scalar(frames, 0.0, 0.5, 0.5) == doctest::Approx(1.0));
  CHECK(sample_scalar(frames, 0.25, 0.5, 0.5) == doctest::Approx(1.5));
  CHECK(sample_scalar(frames, 1.0, 0.5, 0.5) == doctest::Approx(3.0));

  VelocityFrames vel;
  vel.grid = g;
  vel.times = {0.0, 1.0};
  VectorField a(g), b(g);
  for (double& v : a.ux) v = 2.0;
  for (double& v : b.ux) v = 4.0;
  vel.fields = {a, b};
  double ux = 0.0, uy = 0.0;
  sample_velocity(vel, 0.5, 0.5, 0.5, ux, uy);
  CHECK(ux == doctest::Approx(3.0));
  CHECK(uy == doctest::Approx(0.0));
}

TEST_CASE("uniform flow is integrated exactly") {
  const GridSpec g(16, 16, 2.0, 2.0);
  const VelocityFrames frames = steady_field(g, one_fn, zero_fn);
  const FlowTrace trace = advect_point(0.2, 1.0, frames, 0.0, 1.5, 10);
  CHECK(trace.x.back() == doctest::Approx(1.7).epsilon(1e-12));
  CHECK(trace.y.back() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(trace.max_clip == 0.0);
  CHECK(trace.times.front() == 0.0);
  CHECK(trace.times.back() == doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("radial expansion matches the exponential flow") {
  // u = 0.05 (x, y): trajectories are x0 exp(0.05 t); div u = 0.1 gives the
  // Jacobian determinant exp(0.1 t) exactly under trapezoid quadrature.
  const GridSpec g(32, 32, 1.0, 1.0);
  const VelocityFrames frames = steady_field(g, coord_x, coord_y);
  const ScalarFrames divu = steady_scalar(g, div_const);

  FlowTrace trace = advect_point(0.3, 0.4, frames, 0.0, 1.0, 200);
  CHECK(trace.x.back() ==
        doctest::Approx(0.3 * std::exp(0.05)).epsilon(1e-7));
  CHECK(trace.y.back() ==
        doctest::Approx(0.4 * std::exp(0.05)).epsilon(1e-7));

  trace = jacobian_det(std::move(trace), divu);
  CHECK(trace.det_jac.back() == doctest::Approx(std::exp(0.1)).epsilon(1e-9));
  CHECK(trace.divu_along.back() == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(trace.det_jac.front() == 1.0);
}

TEST_CASE("boundary clipping is logged and keeps the point inside") {
  const GridSpec g(16, 16, 1.0, 1.0);
  const VelocityFrames frames = steady_field(g, one_fn, zero_fn);
  const FlowTrace trace = advect_point(0.9, 0.5, frames, 0.0, 1.0, 50);
  CHECK(trace.x.back() <= 1.0);
  CHECK(trace.x.back() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(trace.max_clip > 0.0);
}

TEST_CASE("transported measure of a still region is its own measure") {
  const GridSpec g(32, 32, 1.0, 1.0);
  const VelocityFrames frames = steady_field(g, zero_fn, zero_fn);
  const ScalarFrames divu = steady_scalar(g, zero_fn);
  ScalarField indicator(g);
  int count = 0;
  for (int j = 10; j < 20; ++j) {
    for (int i = 5; i < 12; ++i) {
      indicator.at(i, j) = 1.0;
      ++count;
    }
  }
  const double measure =
      transported_measure(indicator, frames, divu, 0.0, 2.0, 4);
  CHECK(measure ==
        doctest::Approx(count * g.hx() * g.hy()).epsilon(1e-13));
}

TEST_CASE("expanding flow inflates the transported measure") {
  const GridSpec g(32, 32, 1.0, 1.0);
  const VelocityFrames frames = steady_field(g, coord_x, coord_y);
  const ScalarFrames divu = steady_scalar(g, div_const);
  ScalarField indicator(g);
  for (int j = 8; j < 16; ++j) {
    for (int i = 8; i < 16; ++i) indicator.at(i, j) = 1.0;
  }
  const double before = 64.0 * g.hx() * g.hy();
  const double after =
      transported_measure(indicator, frames, divu, 0.0, 1.0, 50);
  CHECK(after == doctest::Approx(before * std::exp(0.1)).epsilon(1e-6));
}

TEST_CASE("frame validation rejects malformed or short sets") {
  const GridSpec g(8, 8, 1.0, 1.0);
  VelocityFrames frames;
  frames.grid = g;
  frames.times = {0.0, 1.0};
  frames.fields = {VectorField(g)};  // size mismatch
  CHECK_THROWS_AS(advect_point(0.5, 0.5, frames, 0.0, 1.0),
                  std::invalid_argument);

  frames.fields = {VectorField(g), VectorField(g)};
  CHECK_THROWS_AS(advect_point(0.5, 0.5, frames, 0.0, 2.0),
                  std::invalid_argument);  // [0,2] not covered
  CHECK_THROWS_AS(advect_point(0.5, 0.5, frames, 1.0, 0.5),
                  std::invalid_argument);  // reversed interval
  CHECK_THROWS_AS(advect_point(0.5, 0.5, frames, 0.0, 1.0, 0),
                  std::invalid_argument);  // no substeps

  frames.times = {1.0, 0.0};  // non-increasing
  CHECK_THROWS_AS(advect_point(0.5, 0.5, frames, 0.0, 1.0),
                  std::invalid_argument);
}

}  // TEST_SUITE
