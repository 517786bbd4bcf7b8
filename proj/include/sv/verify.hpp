#pragma once

#include <string>
#include <vector>

#include "sv/solver.hpp"

namespace sv {

struct VerifyOptions {
  Truncation trunc;     // window for the solver-based checks
  unsigned long seed = 0;  // drives the supplementary randomized probes
  bool corrupt = false;    // negative-control hook: corrupt the bracket table
  std::string only;        // substring filter on check names; empty = run all
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // counts, dimensions, or the first failure
  double ms = 0.0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const CheckResult& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Runs the full battery of exact checks (or the name-filtered subset):
// bracket axioms, straightening identities, Whittaker/singular vector
// spaces at the window, submodule closures, nilpotency and the L_0-shift
// intertwiner. Deterministic given (options.trunc, options.seed).
VerifyReport run_verify(const VerifyOptions& opts);

// Closed form for straightening M_m past L_{-k}^a:
//   M_m L_{-k}^a = sum_{i=0}^a (-1)^i (prod_{j<i} (m - jk)) (a choose i)
//                  L_{-k}^{a-i} M_{m-ik}
// Built term by term, independently of the rewriting engine's route.
UEAElement straightening_closed_form(const Int& m, const Int& k, unsigned a);

}  // namespace sv
