#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tumorsim/config.hpp"
#include "tumorsim/criteria.hpp"
#include "tumorsim/greens.hpp"
#include "tumorsim/io.hpp"
#include "tumorsim/simulator.hpp"

namespace {

std::string out_directory() {
  const char* env = std::getenv("SIM_OUT_DIR");
  return (env != nullptr && *env != '\0') ? env : "./out";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  out << text;
}

int cmd_run(const std::string& config_path) {
  const tumorsim::SimConfig config =
      tumorsim::parse_config(slurp(config_path));
  const std::string out_dir = out_directory();
  std::filesystem::create_directories(out_dir);

  const tumorsim::RunRecord rec = tumorsim::run(config);

  write_text(out_dir + "/run_config.json",
             tumorsim::serialize_config(rec.config) + "\n");
  tumorsim::write_diagnostics_csv(out_dir + "/diagnostics.csv", rec.rows);
  tumorsim::write_snapshot(out_dir + "/final.txt", rec.final_n, rec.final_t);
  tumorsim::write_snapshot(out_dir + "/final_w.txt", rec.final_W,
                           rec.final_t);
  for (std::size_t k = 0; k < rec.snapshots.size(); ++k) {
    char name[40];
    std::snprintf(name, sizeof name, "snapshot_%03zu.txt", k);
    tumorsim::write_snapshot(out_dir + "/" + name, rec.snapshots[k].second,
                             rec.snapshots[k].first);
  }

  const tumorsim::DiagRow& last = rec.rows.back();
  std::cout << "termination: " << rec.termination << " after " << rec.steps
            << " steps at t = " << tumorsim::format_g17(rec.final_t) << "\n"
            << "density range [" << tumorsim::format_g17(last.min_n) << ", "
            << tumorsim::format_g17(last.max_n) << "], mass "
            << tumorsim::format_g17(last.mass) << "\n"
            << "outputs in " << out_dir << "\n";
  return rec.completed() ? 0 : 2;
}

int cmd_experiment(const std::string& preset) {
  const std::string out_dir = out_directory();
  std::vector<tumorsim::CheckResult> results;
  if (preset == "all") {
    results = tumorsim::run_all_criteria(out_dir);
  } else {
    results.push_back(tumorsim::run_criterion(preset, out_dir));
  }
  bool all_pass = true;
  for (const tumorsim::CheckResult& r : results) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.label
              << ": " << r.detail << "\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}

int cmd_green(const std::string& config_path) {
  const tumorsim::SimConfig config =
      tumorsim::parse_config(slurp(config_path));
  const std::string out_dir = out_directory();
  std::filesystem::create_directories(out_dir);

  const tumorsim::GreenMatrix green = tumorsim::discrete_green_matrix(
      config.grid(), config.params.mu, config.tol);
  tumorsim::write_green_matrix(out_dir + "/green_matrix.txt", green);

  const double asym = green.max_asymmetry();
  const double max_entry = green.max_entry();
  const double min_entry = green.min_entry();
  std::cout << "green matrix for " << config.nx << "x" << config.ny
            << " cells, mu = " << tumorsim::format_g17(config.params.mu)
            << "\n"
            << "max |G - G^T| = " << tumorsim::format_g17(asym)
            << " (relative " << tumorsim::format_g17(asym / max_entry)
            << ")\n"
            << "entry range [" << tumorsim::format_g17(min_entry) << ", "
            << tumorsim::format_g17(max_entry) << "]\n"
            << "dump in " << out_dir << "/green_matrix.txt\n";
  return min_entry > 0.0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Structured-grid solver for a growth model coupling conservative "
      "density transport to a screened elliptic potential"};
  app.require_subcommand(1);

  std::string run_config;
  CLI::App* run_cmd =
      app.add_subcommand("run", "run one simulation from a JSON config");
  run_cmd->add_option("config", run_config, "path to the JSON config")
      ->required();

  std::string preset;
  CLI::App* exp_cmd = app.add_subcommand(
      "experiment", "run an acceptance preset (name, id, or \"all\")");
  exp_cmd->add_option("preset", preset, "preset name or criterion id")
      ->required();

  std::string green_config;
  CLI::App* green_cmd = app.add_subcommand(
      "green", "assemble and dump the discrete Green matrix of a config");
  green_cmd->add_option("config", green_config, "path to the JSON config")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) return cmd_run(run_config);
    if (exp_cmd->parsed()) return cmd_experiment(preset);
    return cmd_green(green_config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  }
}
