#include "tumorsim/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <utility>

#include "tumorsim/flowmap.hpp"
#include "tumorsim/greens.hpp"
#include "tumorsim/simulator.hpp"

namespace tumorsim {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_snapshot(const std::string& path, const ScalarField& field,
                    double t) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  out << "# nx=" << field.grid.nx << " ny=" << field.grid.ny
      << " lx=" << format_g17(field.grid.lx)
      << " ly=" << format_g17(field.grid.ly) << " t=" << format_g17(t)
      << "\n";
  for (const double v : field.values) {
    out << format_g17(v) << "\n";
  }
  out.flush();
  if (!out) {
    throw std::runtime_error("write failed for " + path);
  }
}

std::pair<ScalarField, double> read_snapshot(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::string header;
  std::getline(in, header);
  int nx = 0;
  int ny = 0;
  double lx = 0.0;
  double ly = 0.0;
  double t = 0.0;
  if (std::sscanf(header.c_str(), "# nx=%d ny=%d lx=%lf ly=%lf t=%lf", &nx,
                  &ny, &lx, &ly, &t) != 5) {
    throw std::runtime_error("malformed snapshot header in " + path);
  }
  GridSpec grid(nx, ny, lx, ly);
  ScalarField field(grid);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!(in >> field.values[k])) {
      throw std::runtime_error("snapshot " + path + " is truncated (expected " +
                               std::to_string(grid.size()) + " values)");
    }
  }
  return {std::move(field), t};
}

void write_diagnostics_csv(const std::string& path,
                           const std::vector<DiagRow>& rows) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  out << "t,min_n,max_n,l1_dist_nstar,grad_lp,cdf_zero,cdf_nu,w_min,w_max,"
         "mass\n";
  for (const DiagRow& r : rows) {
    out << format_g17(r.t) << ',' << format_g17(r.min_n) << ','
        << format_g17(r.max_n) << ',' << format_g17(r.l1_dist_nstar) << ','
        << format_g17(r.grad_lp) << ',' << format_g17(r.cdf_zero) << ','
        << format_g17(r.cdf_nu) << ',' << format_g17(r.w_min) << ','
        << format_g17(r.w_max) << ',' << format_g17(r.mass) << "\n";
  }
  out.flush();
  if (!out) {
    throw std::runtime_error("write failed for " + path);
  }
}

void write_trace_csv(const std::string& path, const FlowTrace& trace) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  out << "t,x,y,det,divu\n";
  for (std::size_t k = 0; k < trace.times.size(); ++k) {
    out << format_g17(trace.times[k]) << ',' << format_g17(trace.x[k]) << ','
        << format_g17(trace.y[k]) << ',' << format_g17(trace.det_jac[k])
        << ',' << format_g17(trace.divu_along[k]) << "\n";
  }
  out.flush();
  if (!out) {
    throw std::runtime_error("write failed for " + path);
  }
}

void write_green_matrix(const std::string& path, const GreenMatrix& matrix) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  const std::size_t n = matrix.grid.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out << i << ' ' << j << ' ' << format_g17(matrix.at(i, j)) << "\n";
    }
  }
  out.flush();
  if (!out) {
    throw std::runtime_error("write failed for " + path);
  }
}

}  // namespace tumorsim
