#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tumorsim/grid.hpp"

namespace tumorsim {

struct DiagRow;   // simulator.hpp
struct FlowTrace; // flowmap.hpp
struct GreenMatrix; // greens.hpp

// Snapshot file: UTF-8 text, one header line
//   # nx=<int> ny=<int> lx=<real> ly=<real> t=<real>
// followed by nx*ny values, one per line, row-major, 17 significant digits.
void write_snapshot(const std::string& path, const ScalarField& field,
                    double t);
std::pair<ScalarField, double> read_snapshot(const std::string& path);

// Diagnostics CSV with header
//   t,min_n,max_n,l1_dist_nstar,grad_lp,cdf_zero,cdf_nu,w_min,w_max,mass
// and one row per sample, 17 significant digits.
void write_diagnostics_csv(const std::string& path,
                           const std::vector<DiagRow>& rows);

// Characteristic-trace CSV with header t,x,y,det,divu.
void write_trace_csv(const std::string& path, const FlowTrace& trace);

// Green-matrix dump: "i j value" triplets, 17 significant digits.
void write_green_matrix(const std::string& path, const GreenMatrix& matrix);

// Formats a double with 17 significant digits (shared by all writers).
std::string format_g17(double v);

}  // namespace tumorsim
