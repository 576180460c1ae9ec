#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "newred/criteria.hpp"
#include "newred/parse.hpp"

using namespace newred;

namespace {

QPoly qp(const std::string& s) { return parse_poly<QQ>(s, QQ::ctx()); }

Rational small_rational(std::mt19937_64& rng) {
  long long n = static_cast<long long>(rng() % 41) - 20;
  long long d = 1 + static_cast<long long>(rng() % 4);
  return Rational{Integer(n), Integer(d)};
}

// independent split finder: does f^2(x+gamma) equal Q(x) * Q(-x) for a monic
// quadratic divisor Q assembled from the full factorization?
bool oracle_second_split(const QuadNormalForm& nf) {
  auto f = nf.to_poly();
  auto shifted = shift(compose(f, f), nf.gamma);
  auto fac = factor_over_q(shifted);
  std::vector<QPoly> linear, quadratic;
  for (const auto& [g, e] : fac.factors) {
    if (g.degree() == 1)
      for (int i = 0; i < e; ++i) linear.push_back(g);
    if (g.degree() == 2) quadratic.push_back(g);
  }
  std::vector<QPoly> cands = quadratic;
  for (size_t i = 0; i < linear.size(); ++i)
    for (size_t j = i + 1; j < linear.size(); ++j) cands.push_back(linear[i] * linear[j]);
  for (const auto& q : cands)
    if (q * reflect(q) == shifted) return true;
  return false;
}

}  // namespace

TEST_CASE("normal form round trip") {
  auto nf = QuadNormalForm::from_monic(Rational(-1), Rational(-1));
  CHECK(nf.gamma == Rational("1/2"));
  CHECK(nf.m == Rational("-7/4"));
  CHECK(nf.coeff_a() == Rational(-1));
  CHECK(nf.coeff_b() == Rational(-1));
  CHECK(nf.to_poly() == qp("x^2-x-1"));

  CHECK_FALSE(QuadNormalForm::of(qp("2x^2+1")).has_value());
  CHECK_FALSE(QuadNormalForm::of(qp("x^3")).has_value());

  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    QuadNormalForm r{small_rational(rng), small_rational(rng)};
    auto back = QuadNormalForm::of(r.to_poly());
    REQUIRE(back.has_value());
    CHECK(back->gamma == r.gamma);
    CHECK(back->m == r.m);
  }
}

TEST_CASE("critical orbit values") {
  QuadNormalForm golden{Rational("1/2"), Rational("-7/4")};
  CHECK(critical_orbit_value(golden, 1) == Rational("-5/4"));
  CHECK(critical_orbit_value(golden, 3) == Rational("121/256"));

  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    QuadNormalForm nf{small_rational(rng), small_rational(rng)};
    int n = 1 + static_cast<int>(rng() % 4);
    CHECK(critical_orbit_value(nf, n) == evaluate(iterate(nf.to_poly(), n), nf.gamma));
  }
}

TEST_CASE("second iterate criterion") {
  CHECK_FALSE(second_iter_symmetric(Rational("1/2"), Rational("-7/4")));
  // construction with m = a - b^2/2, gamma = a^2 - m^2 - m at b = 2, a = 3
  CHECK(second_iter_symmetric(Rational(7), Rational(1)));
  CHECK(second_iter_symmetric(Rational(4), Rational(0)));

  std::mt19937_64 rng(3);
  int agree_true = 0;
  for (int i = 0; i < 200; ++i) {
    QuadNormalForm nf{small_rational(rng), small_rational(rng)};
    if (i % 2 == 0) {
      // planted split: pick a, b and derive (gamma, m) that satisfy it
      Rational a = small_rational(rng), b = small_rational(rng);
      nf.m = a - b * b / Rational(2);
      nf.gamma = a * a - nf.m * nf.m - nf.m;
    }
    bool got = second_iter_symmetric(nf.gamma, nf.m);
    CHECK(got == oracle_second_split(nf));
    if (got) ++agree_true;
  }
  CHECK(agree_true >= 90);
}

TEST_CASE("third iterate non-membership condition") {
  CHECK(third_iter_condition2(Rational("1/2"), Rational("-7/4")));
  Rational m(5);
  CHECK_FALSE(third_iter_condition2(-m, m));  // -m-gamma = 0 is a square
  CHECK_FALSE(third_iter_condition2(Rational(7), Rational(1)));
}

TEST_CASE("newly reducible driver over Q") {
  auto golden = qp("x^2-x-1");
  auto w = newly_reducible(golden, 3);
  REQUIRE(w.has_value());
  CHECK(w->n == 3);
  CHECK(w->chain == std::vector<bool>{true, true});
  REQUIRE(w->factors.factors.size() == 2);
  CHECK(w->factors.factors[0].first == qp("x^4-3x^3+4x-1"));
  CHECK(w->factors.factors[1].first == qp("x^4-x^3-3x^2+x+1"));

  CHECK_FALSE(newly_reducible(golden, 2).has_value());
  CHECK_THROWS_AS(newly_reducible(golden, 1), std::invalid_argument);
  CHECK_THROWS_AS(newly_reducible(qp("x+1"), 2), std::invalid_argument);

  // reducible f never qualifies
  CHECK_FALSE(newly_reducible(qp("x^2-1"), 2).has_value());

  // fast paths and the plain factorization route agree on a small box
  for (long long a = -3; a <= 3; ++a) {
    for (long long b = -3; b <= 3; ++b) {
      QPoly f(QQ::ctx(), {Rational(b), Rational(a), Rational(1)});
      for (int n : {2, 3}) {
        auto fast = newly_reducible(f, n, true);
        auto slow = newly_reducible(f, n, false);
        CHECK(fast.has_value() == slow.has_value());
        if (fast && slow) {
          CHECK(fast->chain == slow->chain);
          CHECK(fast->factors.factors == slow->factors.factors);
        }
      }
    }
  }

  // non-monic: conjugate of golden by x -> 2x keeps the iterate structure
  auto nm = newly_reducible(qp("2x^2-x-1/2"), 3);
  REQUIRE(nm.has_value());
  CHECK(nm->factors.unit == Rational(128));
  CHECK(nm->factors.factors.size() == 2);
}

TEST_CASE("newly reducible driver over finite fields") {
  auto f2 = GF::prime(2);
  auto f = parse_poly<GF>("x^2+x+1", f2);
  CHECK_FALSE(newly_reducible(f, 2).has_value());
  auto w3 = newly_reducible(f, 3);
  REQUIRE(w3.has_value());  // f^3 factors while f^2 stays irreducible
  CHECK(w3->chain == std::vector<bool>{true, true});
  CHECK(deglem_check(*w3, 2));
}

TEST_CASE("symmetric split structure") {
  auto golden = qp("x^2-x-1");
  auto h = symmetric_split(golden, 3);
  REQUIRE(h.has_value());
  CHECK(*h == qp("x^4-3x^3+4x-1"));
  // partner recovered through x -> -(x + b/a) with b = -1
  CHECK(compose(*h, qp("-x+1")) == qp("x^4-x^3-3x^2+x+1"));

  auto fam = qp("(x-7)^2+8");
  auto h2 = symmetric_split(fam, 2);
  REQUIRE(h2.has_value());
  CHECK(*h2 == qp("x^2-16x+66"));
  CHECK(compose(*h2, qp("-x+14")) == qp("x^2-12x+38"));

  // non-monic: conjugate of (x-7)^2+8 by x -> 2x, still splits at n = 2
  auto nm = qp("2x^2-14x+57/2");
  auto w = newly_reducible(nm, 2);
  REQUIRE(w.has_value());
  auto h3 = symmetric_split(nm, *w);
  REQUIRE(h3.has_value());
  // partner map is x -> -(x + b/a) = -x + 7 here
  CHECK(scale(*h3 * compose(*h3, qp("-x+7")), Rational(8)) == iterate(nm, 2));

  CHECK_THROWS_AS(symmetric_split(golden, 2), std::invalid_argument);
  CHECK(structure_violation_count() == 0);
}

TEST_CASE("x^d - c irreducibility criterion") {
  CHECK_FALSE(xdc_irreducible(Rational(-4), 4));
  CHECK(xdc_irreducible(Rational(93312), 3));
  CHECK(xdc_irreducible(Rational(192), 4));
  CHECK(xdc_irreducible(Rational(2), 2));
  CHECK_FALSE(xdc_irreducible(Rational(4), 2));
  CHECK_FALSE(xdc_irreducible(Rational(0), 3));
  CHECK(xdc_irreducible(Rational(0), 1));
  CHECK_FALSE(xdc_irreducible(Rational("27/8"), 3));
  CHECK_THROWS_AS(xdc_irreducible(Rational(5), 0), std::invalid_argument);

  // agreement with the actual factorization behavior
  std::mt19937_64 rng(4);
  for (int i = 0; i < 60; ++i) {
    Rational c = small_rational(rng);
    int d = 2 + static_cast<int>(rng() % 7);
    auto f = QPoly::x(QQ::ctx());
    auto fx = pow(f, static_cast<unsigned long>(d)) - QPoly::constant(QQ::ctx(), c);
    CHECK(xdc_irreducible(c, d) == irreducible_q(fx));
  }
}

TEST_CASE("x^d - c criterion over finite fields") {
  auto f7 = GF::prime(7);
  // q-1 = 6; cubes have index 3: 1 and 6 are the cubes
  CHECK_FALSE(xdc_irreducible_gf(f7, f7->from_int(1), 3));
  CHECK(xdc_irreducible_gf(f7, f7->from_int(2), 3));
  CHECK_FALSE(xdc_irreducible_gf(f7, f7->from_int(2), 7));  // Frobenius

  for (std::uint64_t q : {3, 5, 7, 9}) {
    auto f = q == 9 ? GF::extension(3, 2) : GF::prime(q);
    for (int d : {2, 3, 4, 6}) {
      for (GF::Elem c = 0; c < q; ++c) {
        std::vector<GF::Elem> v(static_cast<size_t>(d) + 1, f->zero());
        v[0] = f->neg(c);
        v[static_cast<size_t>(d)] = f->one();
        FPoly fx(f, std::move(v));
        CHECK(xdc_irreducible_gf(f, c, d) == irreducible_gf(fx));
      }
    }
  }
}

TEST_CASE("characteristic-2 second iterate splitting") {
  auto f2 = GF::prime(2);
  CHECK_FALSE(char2_second_iter(f2, 1, 1).has_value());
  CHECK_THROWS_AS(char2_second_iter(GF::prime(3), 1, 1), std::invalid_argument);

  auto f4 = GF::extension(2, 2);
  auto h = char2_second_iter(f4, 1, 0);
  REQUIRE(h.has_value());

  // exhaustive oracle over small char-2 fields: a split reported exactly when
  // some (c, d) satisfies the identity
  for (std::uint64_t q : {2, 4, 8}) {
    auto f = q == 2 ? GF::prime(2) : GF::extension(2, q == 4 ? 2 : 3);
    for (GF::Elem a = 0; a < q; ++a) {
      for (GF::Elem b = 0; b < q; ++b) {
        FPoly fp(f, {b, a, f->one()});
        auto f2it = iterate(fp, 2);
        bool found = false;
        FPoly hh = FPoly::zero(f);
        for (GF::Elem c = 0; c < q && !found; ++c) {
          for (GF::Elem d = 0; d < q && !found; ++d) {
            FPoly cand(f, {d, c, f->one()});
            if (cand * shift(cand, a) == f2it) {
              found = true;
              hh = cand;
            }
          }
        }
        auto got = char2_second_iter(f, a, b);
        CHECK(got.has_value() == found);
        if (got) CHECK(*got * shift(*got, a) == f2it);
      }
    }
  }
}

TEST_CASE("fourth iterate residual system") {
  std::array<Rational, 8> zero{};
  auto r0 = s4_residual(Rational(0), Rational(0), zero);
  for (const auto& v : r0) CHECK(v.is_zero());

  // h = ((x^2-1)^2-1)^2 - 1 squares to f^4(x+1) for f = (x-1)^2
  std::array<Rational, 8> a{};
  a[0] = Rational(-1);
  a[4] = Rational(4);
  a[6] = Rational(-4);
  auto r1 = s4_residual(Rational(-1), Rational(1), a);
  for (const auto& v : r1) CHECK(v.is_zero());

  auto bad = a;
  bad[0] = Rational(2);
  auto r2 = s4_residual(Rational(-1), Rational(1), bad);
  CHECK_FALSE(r2[0].is_zero());

  // residual really matches the coefficient equations of h(x)h(-x)
  std::mt19937_64 rng(6);
  for (int i = 0; i < 40; ++i) {
    Rational m = small_rational(rng), gamma = small_rational(rng);
    std::array<Rational, 8> av;
    for (auto& v : av) v = small_rational(rng);
    std::vector<Rational> hc(9);
    for (int k = 0; k < 8; ++k) hc[static_cast<size_t>(k)] = av[static_cast<size_t>(k)];
    hc[8] = Rational(1);
    QPoly h8(QQ::ctx(), std::move(hc));
    QuadNormalForm nf{gamma, m};
    auto lhs = shift(iterate(nf.to_poly(), 4), gamma);
    auto diff = lhs - h8 * reflect(h8);
    auto res = s4_residual(m, gamma, av);
    // even-degree coefficients of the difference, top down, match the residual
    for (int k = 0; k < 8; ++k)
      CHECK(res[static_cast<size_t>(k)] == diff.coeff(2 * k));
  }
}

TEST_CASE("degenerate center values never split at the third iterate") {
  std::mt19937_64 rng(8);
  int tested = 0;
  for (int i = 0; i < 400 && tested < 100; ++i) {
    Rational gamma = small_rational(rng);
    for (Rational m : {Rational(0), Rational(-2)}) {
      QuadNormalForm nf{gamma, m};
      if (rational_is_square(-m - gamma).has_value()) continue;  // f reducible
      CHECK_FALSE(newly_reducible(nf.to_poly(), 3).has_value());
      ++tested;
    }
  }
  CHECK(tested >= 100);
}

TEST_CASE("factor degree divisibility check") {
  auto w = newly_reducible(qp("x^2-x-1"), 3);
  REQUIRE(w.has_value());
  CHECK(deglem_check(*w, 2));

  NewlyReducibleWitness<QQ> fake;
  fake.n = 2;
  fake.factors.field = QQ::ctx();
  fake.factors.unit = Rational(1);
  fake.factors.factors.emplace_back(qp("x^2+1"), 1);
  fake.factors.factors.emplace_back(qp("x^4+2"), 1);
  CHECK_FALSE(deglem_check(fake, 3));
  CHECK(deglem_check(fake, 2));
}
