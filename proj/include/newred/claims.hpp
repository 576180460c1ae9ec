#pragma once

#include <string>
#include <vector>

namespace newred {

struct ClaimResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  double budget_seconds = 0;  // 0 = no wall-clock requirement
  std::string detail;         // first failure, empty on pass
};

// The bundled claim suite: twelve deterministic end-to-end checks, each with a
// wall-clock budget counted as part of pass/fail. quick = true shrinks the
// heaviest sweeps for interactive use; the acceptance gate runs the full
// version. Deterministic: same results on every run.
std::vector<ClaimResult> run_claims(bool quick = false);

std::string claims_table(const std::vector<ClaimResult>& results);
bool all_pass(const std::vector<ClaimResult>& results);

}  // namespace newred
