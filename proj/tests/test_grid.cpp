#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "test_helpers.hpp"
#include "tumorsim/grid.hpp"

using namespace tumorsim;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("grid") {

TEST_CASE("spec geometry and indexing") {
  const GridSpec g(8, 4, 2.0, 1.0);
  CHECK(g.hx() == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(g.hy() == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(g.measure() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(g.size() == 32);
  CHECK(g.idx(0, 0) == 0);
  CHECK(g.idx(7, 0) == 7);
  CHECK(g.idx(0, 1) == 8);
  CHECK(g.idx(3, 2) == 19);
  CHECK(g.cell_x(0) == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(g.cell_x(7) == doctest::Approx(2.0 - 0.125).epsilon(1e-14));
  CHECK(g.cell_y(0) == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(g.cell_y(3) == doctest::Approx(1.0 - 0.125).epsilon(1e-14));
}

TEST_CASE("spec rejects degenerate extents") {
  CHECK_THROWS_AS(GridSpec(0, 4, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec(4, -1, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec(4, 4, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec(4, 4, 1.0, -2.0), std::invalid_argument);
}

TEST_CASE("field_from_fn samples at cell centers") {
  const GridSpec g(16, 16, 1.0, 1.0);
  const ScalarField f =
      field_from_fn(g, [](double x, double y) { return 2.0 * x - 3.0 * y; });
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      CHECK(f.at(i, j) ==
            doctest::Approx(2.0 * g.cell_x(i) - 3.0 * g.cell_y(j))
                .epsilon(1e-14));
    }
  }
}

TEST_CASE("field_from_fn rejects non-finite samples naming the cell") {
  const GridSpec g(4, 4, 1.0, 1.0);
  CHECK(throws_containing<std::domain_error>(
      [&] {
        field_from_fn(g, [](double x, double) {
          return x > 0.5 ? std::nan("") : 0.0;
        });
      },
      "(2, 0)"));
}

TEST_CASE("integrate is exact for constants") {
  const GridSpec g(32, 16, 2.0, 0.5);
  const ScalarField f = field_from_fn(g, [](double, double) { return 0.7; });
  CHECK(integrate(f) == doctest::Approx(0.7 * g.measure()).epsilon(1e-14));
}

TEST_CASE("integrate of an odd-symmetric mode vanishes") {
  const GridSpec g(32, 32, 1.0, 1.0);
  const ScalarField f = field_from_fn(g, [](double x, double y) {
    return std::cos(kPi * x) * std::cos(kPi * y);
  });
  CHECK(std::fabs(integrate(f)) < 1e-13);
}

TEST_CASE("lq_norm on constants and inputs") {
  const GridSpec g(8, 8, 1.0, 1.0);
  const ScalarField f = field_from_fn(g, [](double, double) { return -0.5; });
  CHECK(lq_norm(f, 2.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(lq_norm(f, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(lq_norm(f, 6.0) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK_THROWS_AS(lq_norm(f, 0.5), std::invalid_argument);
}

TEST_CASE("gradient_centered is exact on affine fields") {
  const GridSpec g(12, 9, 1.5, 1.0);
  const ScalarField f = field_from_fn(
      g, [](double x, double y) { return 4.0 + 2.5 * x - 1.25 * y; });
  const VectorField grad = gradient_centered(f);
  for (std::size_t k = 0; k < g.size(); ++k) {
    CHECK(grad.ux[k] == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(grad.uy[k] == doctest::Approx(-1.25).epsilon(1e-12));
  }
}

TEST_CASE("gradient_centered converges at second order") {
  const auto max_error = [](int n) {
    const GridSpec g(n, n, 1.0, 1.0);
    const ScalarField f = field_from_fn(g, [](double x, double y) {
      return std::cos(kPi * x) * std::cos(kPi * y);
    });
    const VectorField grad = gradient_centered(f);
    double worst = 0.0;
    for (int j = 0; j < g.ny; ++j) {
      for (int i = 0; i < g.nx; ++i) {
        const double x = g.cell_x(i), y = g.cell_y(j);
        const double ex = -kPi * std::sin(kPi * x) * std::cos(kPi * y);
        const double ey = -kPi * std::cos(kPi * x) * std::sin(kPi * y);
        worst = std::max(worst, std::fabs(grad.x_at(i, j) - ex));
        worst = std::max(worst, std::fabs(grad.y_at(i, j) - ey));
      }
    }
    return worst;
  };
  const double e32 = max_error(32);
  const double e64 = max_error(64);
  CHECK(e64 < e32);
  CHECK(e32 / e64 == doctest::Approx(4.0).epsilon(0.25));
}

TEST_CASE("gradient_centered rejects two-cell directions, allows one-cell") {
  const ScalarField two(GridSpec(2, 5, 1.0, 1.0));
  CHECK_THROWS_AS(gradient_centered(two), std::invalid_argument);
  const GridSpec line(7, 1, 1.0, 1.0);
  const ScalarField f =
      field_from_fn(line, [](double x, double) { return 3.0 * x; });
  const VectorField grad = gradient_centered(f);
  for (std::size_t k = 0; k < line.size(); ++k) {
    CHECK(grad.ux[k] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(grad.uy[k] == 0.0);
  }
}

}  // TEST_SUITE
