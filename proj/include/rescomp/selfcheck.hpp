// Machine-checkable property suite across every module, runnable from the
// CLI (`rescomp verify`).  Each check either passes or carries a short
// failure detail; a check that throws is reported failed with the
// exception text.  The grids are fixed so the output is deterministic.

#pragma once

#include "rescomp/sweep.hpp"

#include <string>
#include <vector>

namespace rescomp {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // empty on pass unless informative
};

// Runs the whole suite.  `opt.threads` feeds the parallel kernels.
std::vector<CheckResult> run_selfcheck(const SweepOptions& opt = {});

}  // namespace rescomp
