#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "newred/criteria.hpp"
#include "newred/factor.hpp"
#include "newred/ffexplore.hpp"
#include "newred/gf.hpp"

using namespace newred;

namespace {

// independent membership scan: raw factorization of every iterate, no criteria
bool oracle_member(std::uint64_t q, int d, int n) {
  auto F = q == 2 || q == 3 || q == 5 || q == 7 ? GF::prime(q) : GF::extension(2, 2);
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) total *= q;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<GF::Elem> c(static_cast<std::size_t>(d) + 1);
    auto rest = code;
    for (int i = 0; i < d; ++i) {
      c[static_cast<std::size_t>(i)] = rest % q;
      rest /= q;
    }
    c[static_cast<std::size_t>(d)] = 1;
    FPoly f(F, std::move(c));
    bool chain = true;
    for (int k = 1; k < n && chain; ++k)
      chain = factor_mod_p(iterate(f, k)).single_irreducible();
    if (chain && !factor_mod_p(iterate(f, n)).single_irreducible()) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("membership anchors over small fields") {
  auto r22 = classify_membership(2, 2, 2);
  CHECK_FALSE(r22.member);
  CHECK(r22.scanned == 4);
  CHECK(r22.witnesses.empty());

  auto r42 = classify_membership(4, 2, 2);
  CHECK(r42.member);
  // the trace-built witness must appear in the exhaustive list
  auto F4 = GF::extension(2, 2);
  auto wit = fintwo_n22_witness(F4);
  FPoly f(F4, {wit.b, wit.a, F4->one()});
  CHECK(std::find(r42.witnesses.begin(), r42.witnesses.end(), f) !=
        r42.witnesses.end());

  auto r23 = classify_membership(2, 2, 3);
  CHECK(r23.member);
  REQUIRE(r23.witnesses.size() == 1);
  CHECK(r23.witnesses[0] == FPoly(GF::prime(2), {1, 1, 1}));  // x^2+x+1

  for (std::uint64_t q : {8ull, 16ull}) CHECK(classify_membership(q, 2, 2).member);
  for (std::uint64_t q : {4ull, 8ull}) CHECK(classify_membership(q, 2, 3).member);
}

TEST_CASE("membership matches the no-shortcut oracle") {
  for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull})
    for (int n : {2, 3})
      CHECK(classify_membership(q, 2, n).member == oracle_member(q, 2, n));
  CHECK(classify_membership(2, 3, 2).member == oracle_member(2, 3, 2));
}

TEST_CASE("odd characteristic always admits a second-iterate witness") {
  for (std::uint64_t q : {3ull, 5ull, 7ull, 9ull, 13ull, 25ull, 27ull, 49ull}) {
    auto r = classify_membership(q, 2, 2);
    CHECK(r.member);
    CHECK(r.scanned == q * q);
  }
}

TEST_CASE("no newly reducible fourth or fifth iterate in characteristic 2") {
  for (std::uint64_t q : {2ull, 4ull})
    for (int k : {4, 5}) CHECK_FALSE(classify_membership(q, 2, k).member);
}

TEST_CASE("witnesses revalidate without fast paths and under thread splits") {
  auto r = classify_membership(4, 2, 3, 1);
  CHECK(r.member);
  for (const auto& f : r.witnesses) {
    auto w = newly_reducible(f, 3, false);
    REQUIRE(w.has_value());
    CHECK(deglem_check(*w, 2));
  }
  auto r4 = classify_membership(4, 2, 3, 4);
  CHECK(r4.witnesses == r.witnesses);
  auto r3 = classify_membership(4, 2, 3, 3);
  CHECK(r3.witnesses == r.witnesses);
}

TEST_CASE("scale and argument guards") {
  CHECK_THROWS_AS(classify_membership(2, 23, 2), std::domain_error);
  CHECK_THROWS_AS(classify_membership(100, 2, 2), std::domain_error);
  CHECK_THROWS_AS(classify_membership(6, 2, 2), std::domain_error);
  CHECK_THROWS_AS(classify_membership(4, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(classify_membership(4, 2, 1), std::invalid_argument);
}

TEST_CASE("every quadratic over small binary fields has reducible third iterate") {
  for (std::uint64_t q : {2ull, 4ull, 8ull}) {
    auto r = verify_ahmadi(q);
    CHECK(r.verified);
    CHECK(r.exceptions.empty());
    CHECK(r.checked == (q - 1) * q * q);

    auto monic = verify_ahmadi(q, true);
    CHECK(monic.verified);
    CHECK(monic.checked == q * q);
  }
  CHECK_THROWS_AS(verify_ahmadi(3), std::domain_error);
  CHECK_THROWS_AS(verify_ahmadi(128), std::domain_error);
}

TEST_CASE("csv report shape") {
  CHECK(membership_csv_header() == "q,d,n,member,witness_count");
  auto r = classify_membership(2, 2, 3);
  CHECK(membership_csv_row(r) == "2,2,3,true,1");
  auto none = classify_membership(2, 2, 2);
  CHECK(membership_csv_row(none) == "2,2,2,false,0");
}
