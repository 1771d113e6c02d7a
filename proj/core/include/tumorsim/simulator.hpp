#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tumorsim/config.hpp"
#include "tumorsim/elliptic.hpp"
#include "tumorsim/grid.hpp"
#include "tumorsim/kinetics.hpp"
#include "tumorsim/transport.hpp"

namespace tumorsim {

// Threshold that counts a cell as vacuum in the sublevel diagnostics.
inline constexpr double kVacuumEps = 1e-10;

// Coupled solver state: W is always the Brinkman solve of a n^gamma.
struct SimState {
  double t = 0.0;
  ScalarField n;
  ScalarField W;
  long step_index = 0;
};

// One diagnostics sample.
//   l1_dist_nstar = L1 norm of n - n_star
//   grad_lp       = sum_j integral (d_j n)^p, p = 6
//   cdf_zero      = measure of {n <= kVacuumEps}     (vacuum measure)
//   cdf_nu        = measure of {n <= nu/2}, nu from vacuum_nu()
struct DiagRow {
  double t = 0.0;
  double min_n = 0.0;
  double max_n = 0.0;
  double l1_dist_nstar = 0.0;
  double grad_lp = 0.0;
  double cdf_zero = 0.0;
  double cdf_nu = 0.0;
  double w_min = 0.0;
  double w_max = 0.0;
  double mass = 0.0;
};

// Velocity / divergence history of a run (kept when config.record_frames).
struct FrameRecord {
  std::vector<double> times;
  std::vector<VectorField> velocities;
  std::vector<ScalarField> divergences;
  std::vector<ScalarField> densities;
};

// Everything a finished (or aborted) run produced.
struct RunRecord {
  SimConfig config;
  GridSpec grid;
  Equilibria eq;
  double nu = 0.0;  // vacuum diagnostic threshold actually used

  std::vector<DiagRow> rows;
  std::vector<std::pair<double, ScalarField>> snapshots;
  std::string termination;  // "t_end" | "steady" | error description
  long steps = 0;
  double max_clamp = 0.0;  // largest negative undershoot seen in any step

  ScalarField final_n;
  ScalarField final_W;
  double final_t = 0.0;

  bool has_frames = false;
  FrameRecord frames;

  bool completed() const {
    return termination == "t_end" || termination == "steady";
  }
};

// Sublevel-set measure F(xi) = hx * hy * #{cells with value <= xi}.
double cdf(const ScalarField& n, double xi);

// Gradient functional sum_j integral (d_j n)^p for even p >= 4 (default 6).
double grad_lp_functional(const ScalarField& n, int p_exp = 6);

// Largest nu with beta nu^(gamma theta) + (a/mu) nu^gamma <= alpha/4, by
// bisection; strictly inside the regime where sub-nu values still grow at
// rate >= alpha/2. Used for the cdf_nu diagnostic column.
double vacuum_nu(const Params& p);

// The coupled time loop: solve W from n, advance n one Strang step, repeat
// until t_end or until the steady detector ||n_next - n||_inf / dt <=
// steady_tol fires. Diagnostics every sample_every steps plus the final
// state; snapshots at the configured times (the step size is shortened to
// land on them exactly). Solver failure or NaN aborts with a partial record
// whose termination names the error.
RunRecord run(const SimConfig& config);

// Verdict on the gradient-dissipation property of a finished run.
struct DissipationReport {
  enum class Status { monotone, violation, inconclusive };
  Status status = Status::inconclusive;
  double max_relative_increase = 0.0;  // worst consecutive-sample increase
  double observed_decrease = 0.0;      // grad_lp(first) - grad_lp(last)
  double predicted_margin = 0.0;       // (alpha/8) min(gt,1) p int grad_lp dt
  std::string note;
};

// Checks that grad_lp is non-increasing across samples within 1e-8 relative
// slack. Runs outside the small-data regime (initial grad_lp^(1/p) >= delta
// or mu < mu_min) give an inconclusive status, not a failure.
DissipationReport check_dissipation(const RunRecord& record,
                                    double delta = 0.5, double mu_min = 5.0);

}  // namespace tumorsim
