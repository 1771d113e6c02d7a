#pragma once

#include <string>
#include <vector>

namespace tumorsim {

// Verdict of one acceptance check. id is "A1".."A12", label the preset name,
// detail a one-line account of the quantities that decided the verdict.
struct CheckResult {
  std::string id;
  std::string label;
  std::string detail;
  bool pass = false;
};

// One experiment preset bound to a criterion.
struct PresetInfo {
  std::string preset;
  std::string id;
  std::string summary;
};

// The twelve presets in criterion order.
const std::vector<PresetInfo>& preset_table();

// Runs one criterion, addressed by preset name ("constant_ode") or id
// ("A2"). When out_dir is nonempty the preset's artifacts (config,
// diagnostics CSV, snapshots, traces, reports) are written there, creating
// the directory if needed. Unknown names throw std::invalid_argument listing
// the valid presets.
CheckResult run_criterion(const std::string& name,
                          const std::string& out_dir = "");

// All twelve criteria in order.
std::vector<CheckResult> run_all_criteria(const std::string& out_dir = "");

}  // namespace tumorsim
