// verify.hpp - per-point closed-form vs oracle verification harness
#pragma once

#include <string>
#include <vector>

#include "lmg/types.hpp"

namespace lmg {

struct VerifyConfig {
  double tol_scale = 1.0;
  double delta_h = 1e-4;           // full-state finite-difference step
  double delta_h_marginal = 3e-3;  // Bures marginal step (roundoff floor)
  int berry_steps = 4096;
  double gap_exclusion = 0.05;     // susceptibility comparisons skip below this
  double dist_exclusion = 0.05;    // Berry comparison: distance to crossings/monopoles
};

struct CheckResult {
  std::string name;
  bool pass = false;
  bool skipped = false;
  double error = 0.0;      // measured discrepancy (0 when skipped)
  double tolerance = 0.0;  // threshold after tol_scale
  std::string reason;      // skip reason or failure note
};

struct PointReport {
  ModelParams params;
  std::vector<CheckResult> entries;

  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.skipped && !e.pass) return false;
    return true;
  }
};

/// Runs every closed-form/oracle pair at one (gamma, h). Pure: failures and
/// skips are data, nothing is thrown for them.
PointReport verify_point(const ModelParams& params,
                         const VerifyConfig& config = {});

}  // namespace lmg
