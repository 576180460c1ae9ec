#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "newred/field.hpp"
#include "newred/poly.hpp"

namespace newred {

// result of scanning all monic degree-d polynomials over F_q for a newly
// reducible n-th iterate
struct MembershipReport {
  std::uint64_t q = 0;
  int d = 0;
  int n = 0;
  bool member = false;
  std::uint64_t scanned = 0;
  std::vector<FPoly> witnesses;  // lexicographic in (c_{d-1}, ..., c_0)
};

// Exhaustive scan; requires q a prime power with q^(d+1) <= 10^7.  workers = 0
// picks a small automatic value; the result is identical for every worker
// count.
MembershipReport classify_membership(std::uint64_t q, int d, int n,
                                     unsigned workers = 0);

// result of checking that every quadratic over F_{2^n} has reducible third
// iterate
struct AhmadiReport {
  std::uint64_t q = 0;
  bool monic_only = false;
  bool verified = false;
  std::uint64_t checked = 0;
  std::vector<FPoly> exceptions;  // quadratics whose third iterate stays irreducible
};

// q = 2^n with n <= 6; includes non-monic quadratics unless monic_only
AhmadiReport verify_ahmadi(std::uint64_t q, bool monic_only = false);

std::string membership_csv_header();
std::string membership_csv_row(const MembershipReport& r);

}  // namespace newred
