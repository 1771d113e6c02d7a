#include "tumorsim/config.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "json.hpp"

#include "tumorsim/io.hpp"

namespace tumorsim {

namespace {

using nlohmann::json;

const std::set<std::string> kKnownKeys = {
    "mu",       "a",           "gamma",       "theta",      "alpha",
    "beta",     "nx",          "ny",          "lx",         "ly",
    "ic",       "ic_value",    "ic_offset",   "ic_amplitude",
    "ic_background", "ic_radius", "ic_center_x", "ic_center_y", "ic_width",
    "ic_snapshot", "t_end",    "cfl",         "tol",        "sample_every",
    "snapshot_times", "steady_tol", "seed",   "record_frames"};

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument("config: " + message);
}

double get_number(const json& obj, const std::string& key) {
  if (!obj.contains(key)) fail("missing required key \"" + key + "\"");
  if (!obj[key].is_number()) fail("key \"" + key + "\" must be a number");
  return obj[key].get<double>();
}

double get_number_or(const json& obj, const std::string& key, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number()) fail("key \"" + key + "\" must be a number");
  return obj[key].get<double>();
}

int get_int(const json& obj, const std::string& key) {
  if (!obj.contains(key)) fail("missing required key \"" + key + "\"");
  if (!obj[key].is_number_integer()) {
    fail("key \"" + key + "\" must be an integer");
  }
  return obj[key].get<int>();
}

void require_positive(double v, const std::string& key) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    fail("key \"" + key + "\" must be positive");
  }
}

}  // namespace

SimConfig parse_config(const std::string& text) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!obj.is_object()) fail("top level must be a JSON object");
  for (const auto& item : obj.items()) {
    if (kKnownKeys.find(item.key()) == kKnownKeys.end()) {
      fail("unknown key \"" + item.key() + "\"");
    }
  }

  SimConfig c;
  c.params.mu = get_number(obj, "mu");
  c.params.a = get_number(obj, "a");
  c.params.gamma = get_number(obj, "gamma");
  c.params.theta = get_number(obj, "theta");
  c.params.alpha = get_number(obj, "alpha");
  c.params.beta = get_number(obj, "beta");
  require_positive(c.params.mu, "mu");
  require_positive(c.params.a, "a");
  require_positive(c.params.theta, "theta");
  require_positive(c.params.alpha, "alpha");
  require_positive(c.params.beta, "beta");
  if (!(c.params.gamma >= 1.0)) fail("key \"gamma\" must be >= 1");

  c.nx = get_int(obj, "nx");
  c.ny = get_int(obj, "ny");
  if (c.nx < 1 || c.ny < 1) fail("keys \"nx\"/\"ny\" must be >= 1");
  c.lx = get_number(obj, "lx");
  c.ly = get_number(obj, "ly");
  require_positive(c.lx, "lx");
  require_positive(c.ly, "ly");

  if (!obj.contains("ic")) fail("missing required key \"ic\"");
  if (!obj["ic"].is_string()) fail("key \"ic\" must be a string");
  c.ic = obj["ic"].get<std::string>();
  if (c.ic == "constant") {
    c.ic_value = get_number(obj, "ic_value");
    if (c.ic_value < 0.0) fail("key \"ic_value\" must be >= 0");
  } else if (c.ic == "cosine_bump" || c.ic == "random_smooth") {
    c.ic_offset = get_number(obj, "ic_offset");
    c.ic_amplitude = get_number(obj, "ic_amplitude");
    if (c.ic_offset < 0.0) fail("key \"ic_offset\" must be >= 0");
    if (c.ic_amplitude < 0.0) fail("key \"ic_amplitude\" must be >= 0");
    if (c.ic_offset - c.ic_amplitude < 0.0) {
      fail("initial condition dips below zero: require ic_offset >= ic_amplitude");
    }
  } else if (c.ic == "vacuum_disk") {
    c.ic_background = get_number(obj, "ic_background");
    c.ic_radius = get_number(obj, "ic_radius");
    require_positive(c.ic_background, "ic_background");
    require_positive(c.ic_radius, "ic_radius");
    c.ic_center_x = get_number_or(obj, "ic_center_x", 0.5 * c.lx);
    c.ic_center_y = get_number_or(obj, "ic_center_y", 0.5 * c.ly);
    c.ic_width = get_number_or(obj, "ic_width",
                               2.0 * std::max(c.lx / c.nx, c.ly / c.ny));
    require_positive(c.ic_width, "ic_width");
  } else if (c.ic == "snapshot") {
    if (!obj.contains("ic_snapshot") || !obj["ic_snapshot"].is_string()) {
      fail("ic family \"snapshot\" requires string key \"ic_snapshot\"");
    }
    c.ic_snapshot = obj["ic_snapshot"].get<std::string>();
  } else {
    fail("key \"ic\" must be one of constant, cosine_bump, vacuum_disk, "
         "random_smooth, snapshot");
  }

  c.t_end = get_number(obj, "t_end");
  require_positive(c.t_end, "t_end");
  c.cfl = get_number_or(obj, "cfl", 0.5);
  if (!(c.cfl > 0.0) || c.cfl > 1.0) fail("key \"cfl\" must lie in (0, 1]");
  c.tol = get_number_or(obj, "tol", 1e-10);
  require_positive(c.tol, "tol");
  if (obj.contains("sample_every")) {
    c.sample_every = get_int(obj, "sample_every");
    if (c.sample_every < 1) fail("key \"sample_every\" must be >= 1");
  }
  if (obj.contains("snapshot_times")) {
    if (!obj["snapshot_times"].is_array()) {
      fail("key \"snapshot_times\" must be an array of numbers");
    }
    for (const auto& v : obj["snapshot_times"]) {
      if (!v.is_number()) fail("key \"snapshot_times\" must contain numbers");
      c.snapshot_times.push_back(v.get<double>());
    }
    std::sort(c.snapshot_times.begin(), c.snapshot_times.end());
    c.snapshot_times.erase(
        std::unique(c.snapshot_times.begin(), c.snapshot_times.end()),
        c.snapshot_times.end());
  }
  c.steady_tol = get_number_or(obj, "steady_tol", 1e-10);
  require_positive(c.steady_tol, "steady_tol");
  if (obj.contains("seed")) {
    if (!obj["seed"].is_number_integer()) fail("key \"seed\" must be an integer");
    c.seed = obj["seed"].get<std::uint64_t>();
  }
  if (obj.contains("record_frames")) {
    if (!obj["record_frames"].is_boolean()) {
      fail("key \"record_frames\" must be a boolean");
    }
    c.record_frames = obj["record_frames"].get<bool>();
  }
  return c;
}

std::string serialize_config(const SimConfig& c) {
  json obj;
  obj["mu"] = c.params.mu;
  obj["a"] = c.params.a;
  obj["gamma"] = c.params.gamma;
  obj["theta"] = c.params.theta;
  obj["alpha"] = c.params.alpha;
  obj["beta"] = c.params.beta;
  obj["nx"] = c.nx;
  obj["ny"] = c.ny;
  obj["lx"] = c.lx;
  obj["ly"] = c.ly;
  obj["ic"] = c.ic;
  if (c.ic == "constant") {
    obj["ic_value"] = c.ic_value;
  } else if (c.ic == "cosine_bump" || c.ic == "random_smooth") {
    obj["ic_offset"] = c.ic_offset;
    obj["ic_amplitude"] = c.ic_amplitude;
  } else if (c.ic == "vacuum_disk") {
    obj["ic_background"] = c.ic_background;
    obj["ic_radius"] = c.ic_radius;
    obj["ic_center_x"] = c.ic_center_x;
    obj["ic_center_y"] = c.ic_center_y;
    obj["ic_width"] = c.ic_width;
  } else if (c.ic == "snapshot") {
    obj["ic_snapshot"] = c.ic_snapshot;
  }
  obj["t_end"] = c.t_end;
  obj["cfl"] = c.cfl;
  obj["tol"] = c.tol;
  obj["sample_every"] = c.sample_every;
  if (!c.snapshot_times.empty()) obj["snapshot_times"] = c.snapshot_times;
  obj["steady_tol"] = c.steady_tol;
  obj["seed"] = c.seed;
  obj["record_frames"] = c.record_frames;
  return obj.dump(2);
}

namespace {

// Deterministic uniform in [-1, 1] independent of the standard library's
// distribution implementation.
double uniform_pm1(std::mt19937_64& rng) {
  return 2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0;
}

}  // namespace

ScalarField initial_condition(const SimConfig& c) {
  const GridSpec g = c.grid();
  const double pi = 3.14159265358979323846;
  if (c.ic == "constant") {
    return field_from_fn(g, [&](double, double) { return c.ic_value; });
  }
  if (c.ic == "cosine_bump") {
    return field_from_fn(g, [&](double x, double y) {
      return c.ic_offset + c.ic_amplitude * std::cos(pi * x / c.lx) *
                               std::cos(pi * y / c.ly);
    });
  }
  if (c.ic == "vacuum_disk") {
    // Negative center/width are "unset" sentinels for configs built in code
    // rather than parsed; resolve them with the same defaults the parser uses.
    const double cx = c.ic_center_x >= 0.0 ? c.ic_center_x : 0.5 * c.lx;
    const double cy = c.ic_center_y >= 0.0 ? c.ic_center_y : 0.5 * c.ly;
    const double width =
        c.ic_width > 0.0 ? c.ic_width : 2.0 * std::max(g.hx(), g.hy());
    return field_from_fn(g, [&, cx, cy, width](double x, double y) {
      const double dx = x - cx;
      const double dy = y - cy;
      const double r = std::sqrt(dx * dx + dy * dy);
      if (r <= c.ic_radius) return 0.0;
      if (r >= c.ic_radius + width) return c.ic_background;
      const double s = (r - c.ic_radius) / width;
      return c.ic_background * s * s * (3.0 - 2.0 * s);  // smoothstep ramp
    });
  }
  if (c.ic == "random_smooth") {
    std::mt19937_64 rng(c.seed);
    struct Mode {
      int kx, ky;
      double c;
    };
    std::vector<Mode> modes;
    double total = 0.0;
    for (int m = 0; m < 6; ++m) {
      Mode mode;
      mode.kx = static_cast<int>(rng() % 4);
      mode.ky = static_cast<int>(rng() % 4);
      if (mode.kx == 0 && mode.ky == 0) mode.kx = 1;
      mode.c = uniform_pm1(rng);
      total += std::fabs(mode.c);
      modes.push_back(mode);
    }
    for (Mode& mode : modes) mode.c /= std::max(total, 1e-300);
    return field_from_fn(g, [&](double x, double y) {
      double v = c.ic_offset;
      for (const Mode& mode : modes) {
        v += c.ic_amplitude * mode.c * std::cos(mode.kx * pi * x / c.lx) *
             std::cos(mode.ky * pi * y / c.ly);
      }
      return std::max(v, 0.0);
    });
  }
  if (c.ic == "snapshot") {
    auto [field, t] = read_snapshot(c.ic_snapshot);
    (void)t;
    if (!(field.grid == g)) {
      throw std::invalid_argument(
          "config: snapshot grid does not match configured grid (key "
          "\"ic_snapshot\")");
    }
    for (double& v : field.values) v = std::max(v, 0.0);
    return field;
  }
  throw std::invalid_argument("config: unknown ic family \"" + c.ic + "\"");
}

}  // namespace tumorsim
