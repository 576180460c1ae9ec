#include "newred/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace newred {

namespace {

QPoly qpoly(std::vector<Rational> coeffs) {
  return QPoly(QQ::ctx(), std::move(coeffs));
}

// c * r^i * s^j, one call per displayed term of the closed formulas below
Rational term(long long c, const Rational& r, int i, const Rational& s, int j) {
  return Rational(c) * r.pow(i) * s.pow(j);
}

// (x - gamma)^d + tail
QPoly centered_power(int d, const Rational& gamma, const Rational& tail) {
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1, Rational(0));
  c[0] = tail;
  c[static_cast<std::size_t>(d)] = Rational(1);
  return shift(qpoly(std::move(c)), -gamma);
}

std::vector<long> odd_prime_divisors(long d) {
  std::vector<long> out;
  long rest = d;
  while (rest % 2 == 0) rest /= 2;
  for (long p = 3; p * p <= rest; p += 2) {
    if (rest % p == 0) {
      out.push_back(p);
      while (rest % p == 0) rest /= p;
    }
  }
  if (rest > 1) out.push_back(rest);
  return out;
}

}  // namespace

bool FamilyMember::all_conditions_hold() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const SideCondition& c) { return c.holds; });
}

FamilyMember quad_n22(const Rational& a) {
  FamilyMember fm;
  fm.name = "quad_n22";
  fm.params = {a};
  fm.n = 2;

  // f = (x - (3a-2))^2 + 4a - 4, i.e. gamma = 3a-2 and m = a-2
  QuadNormalForm nf{Rational(3) * a - Rational(2), a - Rational(2)};
  fm.nf = nf;
  fm.gamma = nf.gamma;
  fm.f = nf.to_poly();

  // f^2 = (x^2 + (-6a+2)x + 9a^2 - 5a)(x^2 + (-6a+6)x + 9a^2 - 17a + 8)
  Rational a2 = a * a;
  QPoly q1 = qpoly({Rational(9) * a2 - Rational(5) * a,
                    Rational(-6) * a + Rational(2), Rational(1)});
  QPoly q2 = qpoly({Rational(9) * a2 - Rational(17) * a + Rational(8),
                    Rational(-6) * a + Rational(6), Rational(1)});
  fm.predicted_factors = {q1, q2};
  fm.factor_degrees = {2, 2};

  Rational one_minus_a = Rational(1) - a;
  fm.quantities.emplace_back("1-a", one_minus_a);
  fm.conditions.push_back(
      {"1-a is not a square in Q (f irreducible)",
       !rational_is_square(one_minus_a).has_value()});
  return fm;
}

FamilyMember quad_n23_surface(const Rational& r, const Rational& s) {
  if (r.is_zero()) throw std::domain_error("quad_n23_surface: r must be nonzero");

  FamilyMember fm;
  fm.name = "quad_n23_surface";
  fm.params = {r, s};
  fm.n = 3;

  Rational gamma_num =
      term(-2, r, 5, s, 2) + term(9, r, 4, s, 4) + term(-4, r, 4, s, 2) +
      term(-16, r, 3, s, 6) + term(32, r, 3, s, 4) + term(16, r, 3, s, 2) +
      term(32, r, 3, s, 0) + term(14, r, 2, s, 8) + term(-64, r, 2, s, 6) +
      term(-8, r, 2, s, 4) + term(96, r, 2, s, 2) + term(128, r, 2, s, 0) +
      term(-6, r, 1, s, 10) + term(48, r, 1, s, 8) + term(-64, r, 1, s, 6) +
      term(-160, r, 1, s, 4) + term(96, r, 1, s, 2) + term(128, r, 1, s, 0) +
      term(1, r, 0, s, 12) + term(-12, r, 0, s, 10) + term(40, r, 0, s, 8) +
      term(-112, r, 0, s, 4) + term(-64, r, 0, s, 2);
  Rational gamma = gamma_num / (Rational(256) * r * r);
  Rational m = (-r * r - Rational(2) * r * s * s - Rational(4) * r +
                s.pow(4) - Rational(4) * s * s - Rational(4)) /
               (Rational(8) * r);

  QuadNormalForm nf{gamma, m};
  fm.nf = nf;
  fm.gamma = gamma;
  fm.f = nf.to_poly();
  fm.factor_degrees = {4, 4};

  // (64r^2)^2 * f^3(x + gamma) = h(x) h(-x)
  Rational c4 = Rational(64) * r * r;
  Rational c3 = Rational(-64) * r * r * s;
  Rational c2 = term(-16, r, 3, s, 0) + term(-64, r, 2, s, 0) +
                term(16, r, 1, s, 4) + term(-64, r, 1, s, 2) +
                term(-64, r, 1, s, 0);
  Rational c1 = term(24, r, 3, s, 1) + term(64, r, 2, s, 1) +
                term(-8, r, 1, s, 5) + term(32, r, 1, s, 3) +
                term(32, r, 1, s, 1);
  Rational c0 = term(1, r, 4, s, 0) + term(-12, r, 3, s, 2) +
                term(10, r, 2, s, 4) + term(-24, r, 2, s, 2) +
                term(-8, r, 2, s, 0) + term(-4, r, 1, s, 6) +
                term(16, r, 1, s, 4) + term(16, r, 1, s, 2) +
                term(1, r, 0, s, 8) + term(-8, r, 0, s, 6) +
                term(8, r, 0, s, 4) + term(32, r, 0, s, 2) +
                term(16, r, 0, s, 0);
  fm.mirror_half = qpoly({c0, c1, c2, c3, c4});
  fm.mirror_scale = (c4 * c4);

  Rational s2 = s * s;
  Rational cls1 = Rational(2) * r - s2 + Rational(4);
  Rational cls2 =
      Rational(-2) * s2 * r.pow(3) +
      (Rational(5) * s2.pow(2) + Rational(4) * s2 + Rational(4)) * r * r +
      (Rational(-4) * s2.pow(3) + Rational(12) * s2.pow(2) +
       Rational(32) * s2 + Rational(16)) * r +
      s2.pow(4) - Rational(8) * s2.pow(3) + Rational(8) * s2.pow(2) +
      Rational(32) * s2 + Rational(16);
  Rational mmg = -m - gamma;
  Rational m2mg = m * m + m + gamma;
  fm.quantities.emplace_back("-m-gamma", mmg);
  fm.quantities.emplace_back("m^2+m+gamma", m2mg);
  fm.quantities.emplace_back("square-class(-m-gamma)", cls1);
  fm.quantities.emplace_back("square-class(m^2+m+gamma)", cls2);

  fm.conditions.push_back({"-m-gamma is not a square in Q (f irreducible)",
                           !rational_is_square(mmg).has_value()});
  fm.conditions.push_back(
      {"second iterate split criterion fails (f^2 irreducible)",
       !second_iter_symmetric(gamma, m)});
  return fm;
}

FamilyMember quad_m_minus1(const Rational& t) {
  FamilyMember fm;
  fm.name = "quad_m_minus1";
  fm.params = {t};
  fm.n = 3;

  Rational t2 = t * t;
  Rational u = (t2 - Rational(8) * t + Rational(8)) * (t2 + Rational(8)) /
               ((t2 - Rational(8)) * (t2 - Rational(8)));
  Rational gamma = Rational(4) * u.pow(4) + Rational(1);
  Rational m(-1);

  QuadNormalForm nf{gamma, m};
  fm.nf = nf;
  fm.gamma = gamma;
  fm.f = nf.to_poly();
  fm.factor_degrees = {4, 4};

  fm.quantities.emplace_back("gamma", gamma);
  fm.quantities.emplace_back("1-gamma", Rational(1) - gamma);
  fm.conditions.push_back({"1-gamma is not a square in Q (f irreducible)",
                           !rational_is_square(Rational(1) - gamma).has_value()});
  fm.conditions.push_back({"gamma is not a square in Q (f^2 irreducible)",
                           !rational_is_square(gamma).has_value()});
  return fm;
}

FamilyMember quad_m_minus1_guarded(const Rational& r) {
  Valuation v5 = padic_valuation(r, Integer(5));
  if (!v5.infinite && v5.v < 0)
    throw std::domain_error("quad_m_minus1_guarded: v_5(r) must be >= 0");

  FamilyMember fm = quad_m_minus1(Rational(25) * r);
  fm.name = "quad_m_minus1_guarded";
  fm.params = {r};
  fm.quantities.emplace_back("t", Rational(25) * r);

  Valuation vg = padic_valuation(fm.gamma, Integer(5));
  fm.conditions.push_back(
      {"v_5(gamma) is odd", !vg.infinite && vg.v % 2 != 0});
  fm.conditions.push_back({"1-gamma < 0", (Rational(1) - fm.gamma).sign() < 0});
  return fm;
}

FamilyMember quad_newfamily(const Integer& k) {
  if (abs(k) < Integer(2) || mod_floor(k, Integer(3)).is_zero())
    throw std::domain_error(
        "quad_newfamily: k must satisfy |k| >= 2 and 3 does not divide k");

  FamilyMember fm;
  fm.name = "quad_newfamily";
  Rational kk{k};
  fm.params = {kk};
  fm.n = 3;

  Rational k2 = kk * kk;
  Rational k4 = k2 * k2;
  Rational m = Rational(-1) - Rational(2) * k2 + k4;
  Rational gamma =
      Rational(1) + k2 * (Rational(-2) + k2) *
                        (Rational(-1) - Rational(4) * k2 + Rational(2) * k4) *
                        (Rational(1) - Rational(4) * k2 + Rational(2) * k4);

  QuadNormalForm nf{gamma, m};
  fm.nf = nf;
  fm.gamma = gamma;
  fm.f = nf.to_poly();
  fm.factor_degrees = {4, 4};

  // -m-gamma = -4k^6 (k^2-2)^3 and m^2+m+gamma = (k^2-1)^2 * cofactor
  Rational mmg = Rational(-4) * k2.pow(3) * (k2 - Rational(2)).pow(3);
  Rational cofactor = Rational(1) + Rational(6) * k2 + Rational(13) * k4 -
                      Rational(16) * k2 * k4 + Rational(4) * k4 * k4;
  fm.quantities.emplace_back("-m-gamma", mmg);
  fm.quantities.emplace_back("m^2+m+gamma", (k2 - Rational(1)).pow(2) * cofactor);
  fm.quantities.emplace_back("cofactor", cofactor);
  fm.quantities.emplace_back("surface r", Rational(2));
  fm.quantities.emplace_back("surface s", Rational(2) * kk);

  Integer cof_mod3 = mod_floor(cofactor.num(), Integer(3));
  fm.conditions.push_back({"-m-gamma < 0 (f irreducible)", mmg.sign() < 0});
  fm.conditions.push_back(
      {"cofactor of m^2+m+gamma is 2 mod 3 (f^2 irreducible)",
       cof_mod3 == Integer(2)});
  return fm;
}

FamilyMember cubic_family(int variant, const Rational& t) {
  if (variant != 1 && variant != 2)
    throw std::invalid_argument("cubic_family: variant must be 1 or 2");
  if (t.is_zero()) throw std::domain_error("cubic_family: t must be nonzero");

  FamilyMember fm;
  fm.name = "cubic_family";
  fm.params = {Rational(variant), t};
  fm.n = 2;
  fm.factor_degrees = {3, 6};

  Rational t3 = t.pow(3);
  Rational t9 = t.pow(9);
  Rational b, gamma;
  if (variant == 1) {
    b = Rational(36) * t3;
    gamma = Rational(-93312) * t9 - Rational(36) * t3;  // -2*6^6 = -93312
  } else {
    b = Rational(-9) * t3;
    gamma = Rational(9) * t3 + Rational(1458) * t9;  // 2*3^6 = 1458
  }

  fm.gamma = gamma;
  fm.f = centered_power(3, gamma, b + gamma);

  Rational c = -(b + gamma);  // f(x + gamma) = x^3 - c
  fm.quantities.emplace_back("b", b);
  fm.quantities.emplace_back("gamma", gamma);
  fm.quantities.emplace_back("binomial constant", c);
  fm.conditions.push_back(
      {"binomial constant is not a cube in Q (f irreducible)",
       xdc_irreducible(c, 3)});
  return fm;
}

FamilyMember quartic_surface(const Rational& r, const Rational& s) {
  if (r == s * s) throw std::domain_error("quartic_surface: r must differ from s^2");

  FamilyMember fm;
  fm.name = "quartic_surface";
  fm.params = {r, s};
  fm.n = 2;
  fm.factor_degrees = {8, 8};  // the symmetric split; either octic may factor further
  fm.degrees_exact = false;

  Rational r1 = r - s * s;
  Rational m = (Rational(2) * s.pow(4) - r * r) / (Rational(8) * r1);
  Rational gamma_num =
      term(-2, r, 5, s, 2) + term(19, r, 4, s, 4) + term(-72, r, 3, s, 6) +
      term(32, r, 3, s, 0) + term(136, r, 2, s, 8) + term(-32, r, 2, s, 2) +
      term(-128, r, 1, s, 10) + term(-64, r, 1, s, 4) + term(48, r, 0, s, 12) +
      term(64, r, 0, s, 6);
  Rational gamma = gamma_num / (Rational(256) * r1 * r1);

  fm.gamma = gamma;
  fm.f = centered_power(4, gamma, m + gamma);

  // f^2(x + gamma) = p(x^2) p(-x^2)
  QPoly p = qpoly({(Rational(-4) * r1 * s.pow(6) + Rational(10) * r1 * r1 * s.pow(4) -
                    Rational(12) * r1.pow(3) * s * s + r1.pow(4) + s.pow(8)) /
                       (Rational(64) * r1 * r1),
                   (Rational(3) * r1 * r1 * s - s.pow(5)) / (Rational(8) * r1),
                   (s.pow(4) - r1 * r1) / (Rational(4) * r1), -s, Rational(1)});
  fm.even_half = p;

  fm.quantities.emplace_back("m", m);
  fm.quantities.emplace_back("gamma", gamma);
  fm.quantities.emplace_back("-m-gamma", -m - gamma);
  fm.conditions.push_back(
      {"x^4 - (-m-gamma) irreducibility criterion (f irreducible)",
       xdc_irreducible(-m - gamma, 4)});
  return fm;
}

FamilyMember quartic_t(const Rational& t) {
  if (t.is_zero()) throw std::domain_error("quartic_t: t must be nonzero");

  FamilyMember fm =
      quartic_surface(Rational(48) * t * t, Rational(4) * t);
  fm.name = "quartic_t";
  fm.params = {t};

  // displayed closed form: f = (x + 192t^8 - 7t^2)^4 - 192t^8
  Rational big = Rational(192) * t.pow(8);
  QPoly direct = centered_power(4, Rational(7) * t * t - big, -big);
  if (!(direct == fm.f))
    throw std::logic_error("quartic_t: closed form disagrees with surface");

  fm.quantities.emplace_back("192t^8", big);
  fm.conditions.push_back({"192t^8 is not a square in Q",
                           !rational_is_square(big).has_value()});
  fm.conditions.push_back({"192t^8 avoids -4*Q^4",
                           !in_minus4_fourth_powers(big).has_value()});
  return fm;
}

FamilyMember highdeg_family(long d, const Rational& k) {
  if (d < 2 || d % 4 != 2)
    throw std::domain_error("highdeg_family: d must be 2 mod 4");

  FamilyMember fm;
  fm.name = "highdeg_family";
  fm.params = {Rational(d), k};
  fm.n = 2;

  Rational c = Rational(4) * k.pow(4);  // f = (x - 4k^4)^d + 4k^4
  fm.gamma = c;
  fm.f = centered_power(static_cast<int>(d), c, c);

  fm.quantities.emplace_back("d", Rational(d));
  fm.quantities.emplace_back("-4k^4", -c);
  fm.conditions.push_back({"-1 is not a square in Q", true});
  fm.conditions.push_back({"-4k^4 is not a square in Q (k nonzero)",
                           !rational_is_square(-c).has_value()});
  for (long p : odd_prime_divisors(d)) {
    fm.conditions.push_back(
        {"-4k^4 is not a " + std::to_string(p) + "-th power in Q",
         !is_nth_power(-c, static_cast<unsigned long>(p)).has_value()});
  }
  fm.conditions.push_back(
      {"f irreducible (binomial criterion)", xdc_irreducible(-c, static_cast<int>(d))});
  fm.conditions.push_back(
      {"f^2 reducible: -4k^4 lies in -4*Q^4 so 4 | d^2 splits it",
       in_minus4_fourth_powers(-c).has_value()});
  return fm;
}

GenbigdStream::GenbigdStream(long d, const Integer& p) : p_(p) {
  if (d < 2 || d % 4 != 2)
    throw std::domain_error("genbigd_k_stream: d must be 2 mod 4");
  if (!is_probable_prime(p))
    throw std::domain_error("genbigd_k_stream: p must be prime");

  long v2 = (p == Integer(2)) ? 1 : 0;  // v_p(2)
  std::vector<long> primes = odd_prime_divisors(d);
  long modulus = 1;
  for (long q : primes) modulus *= q;
  long x = 0;
  // smallest x >= 0 with 4x = 1 - 2*v_p(2) mod q for every odd prime q | d
  for (; x < modulus; ++x) {
    bool ok = true;
    for (long q : primes) {
      long lhs = (4 * x - (1 - 2 * v2)) % q;
      if (lhs < 0) lhs += q;
      if (lhs != 0) {
        ok = false;
        break;
      }
    }
    if (ok) break;
  }
  x0_ = x;
  step_ = modulus;
}

Integer GenbigdStream::at(std::size_t j) const {
  unsigned long e = static_cast<unsigned long>(x0_) +
                    static_cast<unsigned long>(j) * static_cast<unsigned long>(step_);
  return pow_ui(p_, e);
}

GenbigdStream genbigd_k_stream(long d, const Integer& p) {
  return GenbigdStream(d, p);
}

FamilyMember family_by_name(const std::string& name, const std::vector<Rational>& params) {
  auto arity = [&](size_t k) {
    if (params.size() != k)
      throw std::invalid_argument("family " + name + " takes " + std::to_string(k) +
                                  " parameter(s), got " + std::to_string(params.size()));
  };
  auto as_integer = [&](size_t i) {
    if (!params[i].is_integer())
      throw std::invalid_argument("family " + name + ": parameter " + std::to_string(i + 1) +
                                  " must be an integer");
    return params[i].num();
  };
  if (name == "n22") {
    arity(1);
    return quad_n22(params[0]);
  }
  if (name == "n23_surface") {
    arity(2);
    return quad_n23_surface(params[0], params[1]);
  }
  if (name == "m_minus1") {
    arity(1);
    return quad_m_minus1(params[0]);
  }
  if (name == "m_minus1_guarded") {
    arity(1);
    return quad_m_minus1_guarded(params[0]);
  }
  if (name == "newfamily") {
    arity(1);
    return quad_newfamily(as_integer(0));
  }
  if (name == "cubic") {
    arity(2);
    return cubic_family(static_cast<int>(as_integer(0).to_ll()), params[1]);
  }
  if (name == "quartic_surface") {
    arity(2);
    return quartic_surface(params[0], params[1]);
  }
  if (name == "quartic_t") {
    arity(1);
    return quartic_t(params[0]);
  }
  if (name == "highdeg") {
    arity(2);
    return highdeg_family(as_integer(0).to_ll(), params[1]);
  }
  throw std::invalid_argument(
      "unknown family '" + name +
      "'; one of: n22 n23_surface m_minus1 m_minus1_guarded newfamily cubic quartic_surface "
      "quartic_t highdeg");
}

}  // namespace newred
