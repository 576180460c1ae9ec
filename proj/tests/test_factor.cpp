#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "newred/factor.hpp"
#include "newred/parse.hpp"

using namespace newred;

namespace {

QPoly qp(const std::string& s) { return parse_poly<QQ>(s, QQ::ctx()); }

FPoly monic_from_code(const GFPtr& f, int deg, std::uint64_t code) {
  std::vector<GF::Elem> c(static_cast<size_t>(deg) + 1);
  for (int i = 0; i < deg; ++i) {
    c[static_cast<size_t>(i)] = code % f->q();
    code /= f->q();
  }
  c[static_cast<size_t>(deg)] = f->one();
  return FPoly(f, std::move(c));
}

std::uint64_t pow_u64(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// trial division by every monic polynomial of degree 1..deg/2
bool oracle_irreducible(const FPoly& f) {
  if (f.degree() < 1) return false;
  auto fm = monic(f);
  for (int e = 1; 2 * e <= fm.degree(); ++e) {
    for (std::uint64_t code = 0; code < pow_u64(f.field()->q(), e); ++code) {
      if ((fm % monic_from_code(f.field(), e, code)).is_zero()) return false;
    }
  }
  return true;
}

FPoly random_poly(const GFPtr& f, int deg, std::mt19937_64& rng) {
  std::vector<GF::Elem> c(static_cast<size_t>(deg) + 1);
  for (auto& e : c) e = rng() % f->q();
  if (c.back() == 0) c.back() = f->one();
  return FPoly(f, std::move(c));
}

}  // namespace

TEST_CASE("squarefree decomposition over finite fields") {
  auto f2 = GF::prime(2);
  auto x = FPoly::x(f2);
  auto one = FPoly::one(f2);
  auto q = x * x + x + one;  // irreducible

  auto parts = squarefree_decomposition((x + one) * (x + one) * q);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == std::pair{q, 1});
  CHECK(parts[1] == std::pair{x + one, 2});

  // derivative vanishes, so the p-th root path is exercised
  auto sq = squarefree_decomposition(q * q);
  REQUIRE(sq.size() == 1);
  CHECK(sq[0] == std::pair{q, 2});

  auto f4 = GF::extension(2, 2);
  std::mt19937_64 rng(20260825);
  for (int it = 0; it < 50; ++it) {
    auto a = monic_from_code(f4, 2, rng() % 16);
    auto b = monic_from_code(f4, 1, rng() % 4);
    auto f = a * a * a * b;
    auto dec = squarefree_decomposition(f);
    auto acc = FPoly::constant(f4, f.lc());
    for (auto& [g, e] : dec) {
      acc = acc * pow(g, static_cast<unsigned long>(e));
      CHECK(g.is_monic());
    }
    CHECK(acc == f);
  }
}

TEST_CASE("factor_mod_p matches the exhaustive oracle") {
  // x^4+x+1 irreducible over F_2: no monic divisor of degree 1 or 2
  auto f2 = GF::prime(2);
  auto f = parse_poly<GF>("x^4+x+1", f2);
  CHECK(oracle_irreducible(f));
  CHECK(irreducible_gf(f));
  auto fac = factor_mod_p(f);
  REQUIRE(fac.factors.size() == 1);
  CHECK(fac.factors[0].first == f);

  // Frobenius: x^4+1 = (x+1)^4 over F_2
  auto fac2 = factor_mod_p(parse_poly<GF>("x^4+1", f2));
  REQUIRE(fac2.factors.size() == 1);
  CHECK(fac2.factors[0] == std::pair{parse_poly<GF>("x+1", f2), 4});

  // second iterate of x^2+x+g over F_4 splits into two quadratics
  auto f4 = GF::extension(2, 2);
  auto g = parse_poly<GF>("x^2+x+g", f4);
  auto it2 = compose(g, g);
  auto fac3 = factor_mod_p(it2);
  REQUIRE(fac3.factors.size() == 2);
  CHECK(fac3.factors[0].first.degree() == 2);
  CHECK(fac3.factors[1].first.degree() == 2);
  CHECK(fac3.factors[0].second == 1);
  CHECK(fac3.expand() == it2);
  CHECK(oracle_irreducible(fac3.factors[0].first));
  CHECK(oracle_irreducible(fac3.factors[1].first));
}

TEST_CASE("factorization round trip over random small-field inputs") {
  std::mt19937_64 rng(7);
  for (std::uint64_t q : {2, 3, 4, 5}) {
    auto f = q == 4 ? GF::extension(2, 2) : GF::prime(q);
    for (int it = 0; it < 40; ++it) {
      auto p = random_poly(f, 1 + static_cast<int>(rng() % 6), rng);
      if (p.degree() < 1) continue;
      auto fac = factor_mod_p(p);
      CHECK(fac.expand() == p);
      for (size_t i = 0; i < fac.factors.size(); ++i) {
        CHECK(fac.factors[i].first.is_monic());
        CHECK(oracle_irreducible(fac.factors[i].first));
        if (i > 0) CHECK(poly_less(fac.factors[i - 1].first, fac.factors[i].first));
      }
    }
  }
}

TEST_CASE("irreducible_gf agrees with trial division") {
  for (std::uint64_t q : {2, 3, 4}) {
    auto f = q == 4 ? GF::extension(2, 2) : GF::prime(q);
    int maxdeg = q == 2 ? 5 : 4;
    for (int d = 1; d <= maxdeg; ++d) {
      for (std::uint64_t code = 0; code < pow_u64(q, d); ++code) {
        auto p = monic_from_code(f, d, code);
        CHECK(irreducible_gf(p) == oracle_irreducible(p));
      }
    }
  }
}

TEST_CASE("factor_over_q on the known split iterates") {
  // third iterate of x^2-x-1 is the product of two quartics
  auto f = qp("x^2-x-1");
  auto f3 = iterate(f, 3);
  auto fac = factor_over_q(f3);
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.factors[0].first == qp("x^4-3x^3+4x-1"));
  CHECK(fac.factors[1].first == qp("x^4-x^3-3x^2+x+1"));
  CHECK(fac.factors[0].second == 1);
  CHECK(fac.factors[1].second == 1);
  CHECK(fac.unit == Rational(1));
  CHECK(fac.expand() == f3);
  CHECK(degree_pattern(f3) == std::vector<int>{4, 4});

  // (x-7)^2+8: the second iterate splits into two known quadratics
  auto g = qp("(x-7)^2+8");
  auto g2 = compose(g, g);
  auto fac2 = factor_over_q(g2);
  REQUIRE(fac2.factors.size() == 2);
  CHECK(fac2.factors[0].first == qp("x^2-16x+66"));
  CHECK(fac2.factors[1].first == qp("x^2-12x+38"));

  CHECK(factor_over_q(qp("x^2+1")).single_irreducible());

  // binomial with a -4 fourth power constant
  CHECK_FALSE(irreducible_q(qp("x^4+4")));
  auto fac3 = factor_over_q(qp("x^4+4"));
  REQUIRE(fac3.factors.size() == 2);
  CHECK(fac3.factors[0].first == qp("x^2-2x+2"));
  CHECK(fac3.factors[1].first == qp("x^2+2x+2"));
}

TEST_CASE("squarefree decomposition over Q") {
  auto parts = squarefree_decomposition(qp("x^4-2x^2+1"));
  REQUIRE(parts.size() == 1);
  CHECK(parts[0] == std::pair{qp("x^2-1"), 2});

  auto f3 = iterate(qp("x^2-x-1"), 3);
  auto sf = squarefree_decomposition(f3);
  REQUIRE(sf.size() == 1);
  CHECK(sf[0] == std::pair{monic(f3), 1});

  auto mixed = qp("(x^2+1)^2(x-3)^3(x+1)");
  auto dec = squarefree_decomposition(mixed);
  REQUIRE(dec.size() == 3);
  CHECK(dec[0] == std::pair{qp("x+1"), 1});
  CHECK(dec[1] == std::pair{qp("x^2+1"), 2});
  CHECK(dec[2] == std::pair{qp("x-3"), 3});
}

TEST_CASE("rational unit and multiplicity bookkeeping") {
  auto f = qp("3/2(x^2-2)(x^2+2)(x-5)^2");
  auto fac = factor_over_q(f);
  CHECK(fac.unit == Rational("3/2"));
  REQUIRE(fac.factors.size() == 3);
  CHECK(fac.factors[0] == std::pair{qp("x-5"), 2});
  CHECK(fac.factors[1] == std::pair{qp("x^2-2"), 1});
  CHECK(fac.factors[2] == std::pair{qp("x^2+2"), 1});
  CHECK(fac.expand() == f);
}

TEST_CASE("irreducible_q pipeline agrees with full factorization") {
  CHECK(irreducible_q(qp("x^2-x-1")));
  CHECK_FALSE(irreducible_q(iterate(qp("x^2-x-1"), 3)));
  CHECK(irreducible_q(qp("x+9")));
  CHECK_FALSE(irreducible_q(qp("x^2-4")));
  CHECK_FALSE(irreducible_q(qp("(x^2+1)^2")));

  std::mt19937_64 rng(500);
  int reducible_seen = 0;
  for (int it = 0; it < 500; ++it) {
    int d = 2 + static_cast<int>(rng() % 11);
    std::vector<Rational> c(static_cast<size_t>(d) + 1);
    for (auto& e : c) e = Rational(static_cast<long long>(rng() % 101) - 50);
    QPoly f(QQ::ctx(), std::move(c));
    if (f.degree() < 2) continue;
    auto fac = factor_over_q(f);
    bool irr = fac.factors.size() == 1 && fac.factors[0].second == 1 &&
               fac.factors[0].first == monic(f);
    CHECK(irreducible_q(f) == irr);
    CHECK(fac.expand() == f);
    if (!irr) ++reducible_seen;
  }
  CHECK(reducible_seen > 5);  // the sample exercises both outcomes
}

TEST_CASE("degree cap behavior for large inputs") {
  // shifted binomial, reducible by the power criterion: no factorization done
  auto big = qp("(x-4)^36+4");
  CHECK_FALSE(irreducible_q(big));
  CHECK_THROWS_AS(factor_over_q(big), degree_cap_error);
  CHECK_THROWS_AS(degree_pattern(big), degree_cap_error);

  // irreducible binomial above the cap still factors (trivially)
  auto irr = qp("x^36-5");
  CHECK(irreducible_q(irr));
  auto fac = factor_over_q(irr);
  CHECK(fac.single_irreducible());

  // non-binomial above the cap has no fast path
  auto dense = qp("x^30+x+1");
  CHECK_THROWS_AS(factor_over_q(dense), degree_cap_error);
  CHECK_THROWS_AS(irreducible_q(dense), degree_cap_error);
  CHECK_THROWS_WITH_AS(degree_pattern(dense), "degree cap exceeded", degree_cap_error);
}
