#pragma once

#include <string>
#include <vector>

namespace chi3 {

struct CheckResult {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;  // failure reason, skip note, or summary stats
  double seconds = 0.0;
};

// Runs the full consistency suite against the built-in reference data.
// Checks that need the genus-2 bootstrap are skipped (and count as passed)
// when skip_bootstrap is set. Never throws; defects land in the results.
std::vector<CheckResult> run_verification(bool skip_bootstrap = false);

}  // namespace chi3
