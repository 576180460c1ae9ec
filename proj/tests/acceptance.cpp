// Acceptance gate: replays the bundled claim suite and prints one PASS/FAIL
// line per claim, with the measured time against each budget. Nonzero exit on
// any failure so ctest reports it.
#include <cstdio>

#include "newred/claims.hpp"

int main() {
  auto results = newred::run_claims();
  std::fputs(newred::claims_table(results).c_str(), stdout);
  return newred::all_pass(results) ? 0 : 1;
}
