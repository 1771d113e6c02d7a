#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tumorsim/grid.hpp"
#include "tumorsim/kinetics.hpp"

namespace tumorsim {

// Full description of a simulation run. Parsed from a flat JSON object whose
// keys match the field names below (model constants appear at top level:
// "mu", "a", "gamma", "theta", "alpha", "beta").
struct SimConfig {
  Params params;

  int nx = 0;
  int ny = 0;
  double lx = 1.0;
  double ly = 1.0;

  // Initial-condition family: constant | cosine_bump | vacuum_disk |
  // random_smooth | snapshot.
  std::string ic;
  double ic_value = 0.0;       // constant: n0 = ic_value
  double ic_offset = 0.0;      // cosine_bump / random_smooth: mean level
  double ic_amplitude = 0.0;   // cosine_bump / random_smooth: deviation scale
  double ic_background = 0.0;  // vacuum_disk: value outside the disk
  double ic_radius = 0.0;      // vacuum_disk: disk radius
  double ic_center_x = -1.0;   // vacuum_disk: disk center (default: domain center)
  double ic_center_y = -1.0;
  double ic_width = -1.0;      // vacuum_disk: mollification width (default: 2 max(h))
  std::string ic_snapshot;     // snapshot: path to a snapshot file

  double t_end = 0.0;
  double cfl = 0.5;
  double tol = 1e-10;
  int sample_every = 10;
  std::vector<double> snapshot_times;
  double steady_tol = 1e-10;
  std::uint64_t seed = 0;
  bool record_frames = false;  // keep velocity/divergence frames for flow maps

  bool operator==(const SimConfig&) const = default;

  GridSpec grid() const { return GridSpec(nx, ny, lx, ly); }
};

// Parses and validates a flat JSON config. Unknown keys, missing required
// keys, and invalid values are rejected with a message naming the key.
// Defaults: cfl = 0.5, tol = 1e-10, sample_every = 10.
SimConfig parse_config(const std::string& text);

// Inverse of parse_config up to config equality (round-trip stable).
std::string serialize_config(const SimConfig& config);

// Builds the initial density field of the configured family. Deterministic
// for a fixed config (random_smooth uses the config seed). The result is
// nonnegative or the config is rejected.
ScalarField initial_condition(const SimConfig& config);

}  // namespace tumorsim
