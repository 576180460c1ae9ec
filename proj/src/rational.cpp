#include "newred/rational.hpp"

#include <stdexcept>

namespace newred {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw std::domain_error("rational with zero denominator");
  mpq_init(q_);
  mpz_set(mpq_numref(q_), num.raw());
  mpz_set(mpq_denref(q_), den.raw());
  mpq_canonicalize(q_);
}

Rational::Rational(const Integer& num) {
  mpq_init(q_);
  mpz_set(mpq_numref(q_), num.raw());
}

Rational::Rational(const std::string& s) {
  auto slash = s.find('/');
  mpq_init(q_);
  try {
    if (slash == std::string::npos) {
      Integer n(s);
      mpz_set(mpq_numref(q_), n.raw());
    } else {
      Integer n(s.substr(0, slash)), d(s.substr(slash + 1));
      if (d.is_zero()) throw std::domain_error("rational with zero denominator");
      mpz_set(mpq_numref(q_), n.raw());
      mpz_set(mpq_denref(q_), d.raw());
      mpq_canonicalize(q_);
    }
  } catch (...) {
    mpq_clear(q_);
    throw;
  }
}

std::string Rational::str() const {
  Integer n = num(), d = den();
  if (d.is_one()) return n.str();
  return n.str() + "/" + d.str();
}

Rational Rational::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Rational r;
  mpq_inv(r.q_, q_);
  return r;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  Rational base = e < 0 ? inv() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rational r;
  mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), k);
  mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), k);
  // base canonical => powers canonical
  return r;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational division by zero");
  Rational r;
  mpq_div(r.q_, a.q_, b.q_);
  return r;
}

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

std::optional<Rational> rational_is_square(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  auto rn = nth_root_exact(q.num(), 2);
  if (!rn) return std::nullopt;
  auto rd = nth_root_exact(q.den(), 2);
  if (!rd) return std::nullopt;
  return Rational(*rn, *rd);
}

std::optional<Rational> is_nth_power(const Rational& q, unsigned long n) {
  if (n == 0) throw std::invalid_argument("0th power");
  if (n == 1) return q;
  auto rn = nth_root_exact(q.num(), n);
  if (!rn) return std::nullopt;
  auto rd = nth_root_exact(q.den(), n);
  if (!rd) return std::nullopt;
  return Rational(*rn, *rd);
}

std::optional<Rational> in_minus4_fourth_powers(const Rational& c) {
  if (c.sign() > 0) return std::nullopt;
  return is_nth_power(-c / Rational(4), 4);
}

Valuation padic_valuation(const Rational& q, const Integer& p) {
  if (p.sign() <= 0 || !is_probable_prime(p))
    throw std::invalid_argument("valuation modulus must be prime, got " + p.str());
  if (q.is_zero()) return Valuation::infinity();
  // reduced fraction: at most one of num, den is divisible by p
  auto [rn, vn] = remove_factor(q.num(), p);
  (void)rn;
  if (vn > 0) return Valuation::finite(vn);
  auto [rd, vd] = remove_factor(q.den(), p);
  (void)rd;
  return Valuation::finite(-vd);
}

}  // namespace newred
