#pragma once

#include <compare>
#include <optional>
#include <string>

#include "newred/integer.hpp"

namespace newred {

// Exact rational number, always canonical: gcd(num, den) = 1, den > 0.
// Serializes as "num/den" (or just "num" when den = 1). No floating point
// anywhere in this library.
class Rational {
public:
  Rational() { mpq_init(q_); }
  Rational(long long v) {
    mpq_init(q_);
    mpq_set_si(q_, static_cast<long>(v), 1);
  }
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const Integer& num);
  explicit Rational(const std::string& s);  // "a/b" or "a"
  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  Integer num() const {
    Integer n;
    mpz_set(n.raw(), mpq_numref(q_));
    return n;
  }
  Integer den() const {
    Integer d;
    mpz_set(d.raw(), mpq_denref(q_));
    return d;
  }

  int sign() const { return mpq_sgn(q_); }
  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

  std::string str() const;

  Rational inv() const;       // throws on zero
  Rational pow(long e) const; // negative e inverts; 0^negative throws

  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator-(const Rational& a) {
    Rational r;
    mpq_neg(r.q_, a.q_);
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = mpq_cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_t q_;
};

Rational abs(const Rational& a);

// nonnegative square root if q is a square of a rational, else nullopt
std::optional<Rational> rational_is_square(const Rational& q);

// n-th root when q is an exact n-th power in Q; root is nonnegative for even n,
// sign of q for odd n. n = 1 returns q itself.
std::optional<Rational> is_nth_power(const Rational& q, unsigned long n);

// k >= 0 with c = -4*k^4, if c lies in -4*Q^4
std::optional<Rational> in_minus4_fourth_powers(const Rational& c);

// p-adic valuation; infinite for q = 0. p must be prime.
struct Valuation {
  bool infinite = false;
  long v = 0;

  static Valuation infinity() { return {true, 0}; }
  static Valuation finite(long v) { return {false, v}; }
  friend bool operator==(const Valuation&, const Valuation&) = default;
};
Valuation padic_valuation(const Rational& q, const Integer& p);

}  // namespace newred
