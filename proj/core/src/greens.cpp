#include "tumorsim/greens.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "tumorsim/elliptic.hpp"

namespace tumorsim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.5772156649015328606;

// Chebyshev fit of K0(x) e^x sqrt(x) as a function of u = 2/x on (0, 1],
// i.e. for x > 2; max relative error < 1e-11. First coefficient stored
// already halved for the Clenshaw form used below.
constexpr double kK0TailCheb[] = {
    1.220151541032977727,
    -0.03144810131196450054,
    0.001569883885730053375,
    -0.0001284954958162780264,
    0.00001394981371887649936,
    -1.831755522719119485e-6,
    2.766813639445015076e-7,
    -4.660489897687947666e-8,
    8.574034017414226086e-9,
    -1.697534509389061516e-9,
    3.577397281400328447e-10,
    -7.957489244477397036e-11,
    1.855949114954926550e-11,
    -4.514597883374519064e-12,
    1.140340588207343965e-12,
    -2.980096923148171794e-13,
    8.032890775068213573e-14,
    -2.227513326745899649e-14,
    6.340076476266790578e-15,
    -1.848593377896248710e-15,
    5.512055998782821431e-16,
    -1.678231124176460689e-16,
    5.210391737240753091e-17,
    -1.647580489724679347e-17,
    5.300431058082442202e-18,
    -1.733164078785333958e-18,
    5.754920564825427120e-19,
    -1.938591254201100315e-19,
    6.610994222086838814e-20,
    -2.256085101114897835e-20,
    7.015265875435175685e-21,
};
constexpr int kK0TailCount = static_cast<int>(std::size(kK0TailCheb));

// K0 for 0 < x <= 2:
//   K0(x) = -(log(x/2) + gamma) I0(x) + sum_{k>=1} (x^2/4)^k / (k!)^2 H_k
// with H_k the k-th harmonic number.
double k0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;  // q^k / (k!)^2
  double i0 = 1.0;
  double hsum = 0.0;
  double hk = 0.0;
  for (int k = 1; k <= 60; ++k) {
    term *= q / (static_cast<double>(k) * k);
    hk += 1.0 / k;
    i0 += term;
    hsum += term * hk;
    if (term * (hk + 1.0) < 1e-20) break;
  }
  return -(std::log(0.5 * x) + kEulerGamma) * i0 + hsum;
}

// K0 for x > 2 through the scaled Chebyshev expansion.
double k0_tail(double x) {
  const double u = 2.0 / x;
  const double y = 2.0 * u - 1.0;  // maps (0, 1] onto (-1, 1]
  const double t = 2.0 * y;
  double b1 = 0.0;
  double b2 = 0.0;
  for (int k = kK0TailCount - 1; k >= 1; --k) {
    const double next = kK0TailCheb[k] + t * b1 - b2;
    b2 = b1;
    b1 = next;
  }
  const double c = kK0TailCheb[0] + y * b1 - b2;
  return std::exp(-x) * c / std::sqrt(x);
}

}  // namespace

double bessel_k0(double x) {
  if (!(x > 0.0)) {
    throw std::invalid_argument("bessel_k0: x must be positive");
  }
  return x <= 2.0 ? k0_series(x) : k0_tail(x);
}

double bessel_k0_by_quadrature(double x) {
  if (!(x > 0.0)) {
    throw std::invalid_argument("bessel_k0_by_quadrature: x must be positive");
  }
  // exp(-x (cosh T - 1)) <= exp(-45) truncation, with one extra unit of range.
  const double T = std::acosh(45.0 / x + 1.0) + 1.0;
  const int n = 200000;  // even
  const double h = T / n;
  const auto f = [x](double t) {
    return std::exp(-x * (std::cosh(t) - 1.0));
  };
  double sum = f(0.0) + f(T);
  double comp = 0.0;
  for (int k = 1; k < n; ++k) {
    const double term = (k % 2 == 1 ? 4.0 : 2.0) * f(k * h);
    const double yk = term - comp;
    const double tk = sum + yk;
    comp = (tk - sum) - yk;
    sum = tk;
  }
  return std::exp(-x) * sum * h / 3.0;
}

double psi_fundamental(double r, double mu, int dim) {
  if (!(r > 0.0)) {
    throw std::invalid_argument("psi_fundamental: r must be positive");
  }
  if (!(mu > 0.0)) {
    throw std::invalid_argument("psi_fundamental: mu must be positive");
  }
  const double root_mu = std::sqrt(mu);
  if (dim == 2) {
    return bessel_k0(r / root_mu) / (2.0 * kPi * mu);
  }
  if (dim == 3) {
    return std::exp(-r / root_mu) / (4.0 * kPi * mu * r);
  }
  throw std::invalid_argument("psi_fundamental: dim must be 2 or 3");
}

double psi_radial_derivative(double r, double mu, int dim) {
  if (!(r > 0.0)) {
    throw std::invalid_argument("psi_radial_derivative: r must be positive");
  }
  const double delta = 1e-6 * r;
  return (psi_fundamental(r + delta, mu, dim) -
          psi_fundamental(r - delta, mu, dim)) /
         (2.0 * delta);
}

double fundamental_normalization_check(double mu, int dim, const BumpSpec& phi,
                                       double kernel_scale) {
  if (!(mu > 0.0)) {
    throw std::invalid_argument(
        "fundamental_normalization_check: mu must be positive");
  }
  if (dim != 2 && dim != 3) {
    throw std::invalid_argument(
        "fundamental_normalization_check: dim must be 2 or 3");
  }
  if (!(phi.radius > 0.0) || !(phi.height != 0.0)) {
    throw std::invalid_argument(
        "fundamental_normalization_check: bump needs positive radius and "
        "nonzero height");
  }
  const double R = phi.radius;
  const double H = phi.height;

  // phi(r) = H E(s) with s = r/R and E(s) = exp(1 - 1/(1 - s^2)).
  // E'(s)  = E * (-2 s / (1-s^2)^2)
  // E''(s) = E * ((E'/E)^2 - 2 (1 + 3 s^2) / (1-s^2)^3)
  // lap phi = phi'' + (dim-1)/r phi'
  //         = (H/R^2) E * (E''/E - 2 (dim-1) / (1-s^2)^2)
  // where the 1/s of the radial term cancelled against E'.
  const auto integrand = [&](double r) -> double {
    if (r <= 0.0) return 0.0;
    const double s = r / R;
    if (s >= 1.0 - 1e-6) return 0.0;  // bump underflows to 0 well before this
    const double om = 1.0 - s * s;
    const double expo = std::exp(1.0 - 1.0 / om);
    const double dlog = -2.0 * s / (om * om);
    const double curv =
        dlog * dlog - 2.0 * (1.0 + 3.0 * s * s) / (om * om * om);
    const double lap =
        (H / (R * R)) * expo * (curv - 2.0 * (dim - 1) / (om * om));
    const double value = H * expo;
    const double surface = dim == 2 ? 2.0 * kPi * r : 4.0 * kPi * r * r;
    return (-mu * lap + value) * kernel_scale * psi_fundamental(r, mu, dim) *
           surface;
  };

  const int n = 40000;  // even
  const double h = R / n;
  double sum = integrand(0.0) + integrand(R);
  double comp = 0.0;
  for (int k = 1; k < n; ++k) {
    const double term = (k % 2 == 1 ? 4.0 : 2.0) * integrand(k * h);
    const double yk = term - comp;
    const double tk = sum + yk;
    comp = (tk - sum) - yk;
    sum = tk;
  }
  const double integral = sum * h / 3.0;
  return std::fabs(integral - H) / std::fabs(H);
}

double GreenMatrix::max_asymmetry() const {
  const std::size_t n = grid.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      worst = std::max(worst, std::fabs(at(i, j) - at(j, i)));
    }
  }
  return worst;
}

double GreenMatrix::max_entry() const {
  return *std::max_element(entries.begin(), entries.end());
}

double GreenMatrix::min_entry() const {
  return *std::min_element(entries.begin(), entries.end());
}

GreenMatrix discrete_green_matrix(const GridSpec& grid, double mu,
                                  double tol) {
  const std::size_t n = grid.size();
  if (n > 4096) {
    throw std::invalid_argument(
        "discrete_green_matrix: nx * ny must be <= 4096 (dense storage); "
        "use solve_brinkman directly for larger grids");
  }
  if (!(mu > 0.0)) {
    throw std::invalid_argument("discrete_green_matrix: mu must be positive");
  }
  GreenMatrix g;
  g.grid = grid;
  g.entries.assign(n * n, 0.0);
  const double weight = 1.0 / (grid.hx() * grid.hy());
  ScalarField f(grid);
  ScalarField prev(grid);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(f.values.begin(), f.values.end(), 0.0);
    f.values[j] = weight;
    EllipticSolve sol =
        solve_brinkman(f, mu, tol, j == 0 ? nullptr : &prev);
    for (std::size_t i = 0; i < n; ++i) {
      g.entries[i * n + j] = sol.W.values[i];
    }
    prev = std::move(sol.W);
  }
  return g;
}

ScalarField fundamental_on_grid(const GridSpec& grid, int source_i,
                                int source_j, double mu) {
  if (source_i < 0 || source_i >= grid.nx || source_j < 0 ||
      source_j >= grid.ny) {
    throw std::invalid_argument("fundamental_on_grid: source cell (" +
                                std::to_string(source_i) + ", " +
                                std::to_string(source_j) + ") out of range");
  }
  const double xs = grid.cell_x(source_i);
  const double ys = grid.cell_y(source_j);
  // Mean distance from the center of a cell to a uniform point of that cell;
  // stands in for r = 0 at the source cell itself.
  const double reg = 0.3826 * std::sqrt(grid.hx() * grid.hy());
  ScalarField out(grid);
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      double r = std::hypot(grid.cell_x(i) - xs, grid.cell_y(j) - ys);
      if (i == source_i && j == source_j) r = reg;
      out.at(i, j) = psi_fundamental(r, mu, 2);
    }
  }
  return out;
}

ScalarField corrector_green(const GridSpec& grid, int source_i, int source_j,
                            double mu, double tol) {
  if (source_i < 0 || source_i >= grid.nx || source_j < 0 ||
      source_j >= grid.ny) {
    throw std::invalid_argument("corrector_green: source cell (" +
                                std::to_string(source_i) + ", " +
                                std::to_string(source_j) + ") out of range");
  }
  if (!(mu > 0.0)) {
    throw std::invalid_argument("corrector_green: mu must be positive");
  }
  const double hx = grid.hx();
  const double hy = grid.hy();
  const double xs = grid.cell_x(source_i);
  const double ys = grid.cell_y(source_j);
  const double wall =
      std::min(std::min(xs, grid.lx - xs), std::min(ys, grid.ly - ys));
  if (wall < 3.0 * std::max(hx, hy)) {
    throw std::invalid_argument(
        "corrector_green: source cell must be at least 3 h away from the "
        "boundary");
  }

  // Coordinate derivative of Psi(|x - y|) at a wall point.
  const auto dpsi = [&](double x, double y, int comp) {
    const double dx = x - xs;
    const double dy = y - ys;
    const double r = std::hypot(dx, dy);
    return psi_radial_derivative(r, mu, 2) * (comp == 0 ? dx : dy) / r;
  };

  // Finite-volume rows of boundary cells pick up the prescribed face
  // gradient: replacing the mirrored (zero) face gradient g by the analytic
  // one shifts the row by -mu g / h on left/bottom faces and +mu g / h on
  // right/top faces.
  ScalarField b(grid);
  for (int j = 0; j < grid.ny; ++j) {
    const double yc = grid.cell_y(j);
    b.at(0, j) += -mu / hx * dpsi(0.0, yc, 0);
    b.at(grid.nx - 1, j) += mu / hx * dpsi(grid.lx, yc, 0);
  }
  for (int i = 0; i < grid.nx; ++i) {
    const double xc = grid.cell_x(i);
    b.at(i, 0) += -mu / hy * dpsi(xc, 0.0, 1);
    b.at(i, grid.ny - 1) += mu / hy * dpsi(xc, grid.ly, 1);
  }

  const EllipticSolve corrector = solve_brinkman(b, mu, tol);
  ScalarField out = fundamental_on_grid(grid, source_i, source_j, mu);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    out.values[k] -= corrector.W.values[k];
  }
  return out;
}

double interior_minimum(const GreenMatrix& g, int source_i, int source_j,
                        double delta) {
  const GridSpec& gr = g.grid;
  if (source_i < 0 || source_i >= gr.nx || source_j < 0 ||
      source_j >= gr.ny) {
    throw std::invalid_argument("interior_minimum: source cell out of range");
  }
  const double xs = gr.cell_x(source_i);
  const double ys = gr.cell_y(source_j);
  const std::size_t col = gr.idx(source_i, source_j);
  double best = std::numeric_limits<double>::infinity();
  bool found = false;
  for (int j = 0; j < gr.ny; ++j) {
    for (int i = 0; i < gr.nx; ++i) {
      const double x = gr.cell_x(i);
      const double y = gr.cell_y(j);
      const double to_source = std::hypot(x - xs, y - ys);
      const double to_wall =
          std::min(std::min(x, gr.lx - x), std::min(y, gr.ly - y));
      if (to_source >= delta && to_wall >= delta) {
        best = std::min(best, g.at(gr.idx(i, j), col));
        found = true;
      }
    }
  }
  if (!found) {
    throw std::invalid_argument(
        "interior_minimum: delta excludes every cell");
  }
  return best;
}

}  // namespace tumorsim
