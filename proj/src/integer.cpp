#include "newred/integer.hpp"

#include <cstdlib>
#include <stdexcept>

namespace newred {

Integer::Integer(const std::string& s) {
  if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
    mpz_clear(z_);
    throw std::invalid_argument("not an integer literal: '" + s + "'");
  }
}

long long Integer::to_ll() const {
  if (!fits_ll()) throw std::overflow_error("integer too large for long long: " + str());
  return mpz_get_si(z_);
}

std::string Integer::str() const {
  char* buf = mpz_get_str(nullptr, 10, z_);
  std::string out(buf);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(buf, out.size() + 1);
  return out;
}

Integer operator/(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("integer division by zero");
  Integer r;
  mpz_tdiv_q(r.z_, a.z_, b.z_);
  return r;
}

Integer operator%(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("integer division by zero");
  Integer r;
  mpz_tdiv_r(r.z_, a.z_, b.z_);
  return r;
}

Integer abs(const Integer& a) {
  Integer r;
  mpz_abs(r.raw(), a.raw());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.raw(), a.raw(), b.raw());
  return r;
}

Integer divexact(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("integer division by zero");
  Integer r;
  mpz_divexact(r.raw(), a.raw(), b.raw());
  return r;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  if (m.sign() <= 0) throw std::domain_error("mod_floor needs positive modulus");
  Integer r;
  mpz_fdiv_r(r.raw(), a.raw(), m.raw());
  return r;
}

Integer pow_ui(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.raw(), base.raw(), e);
  return r;
}

Integer sqrt_floor(const Integer& a) {
  if (a.sign() < 0) throw std::domain_error("sqrt of negative integer");
  Integer r;
  mpz_sqrt(r.raw(), a.raw());
  return r;
}

bool is_perfect_square(const Integer& a) {
  return a.sign() >= 0 && mpz_perfect_square_p(a.raw()) != 0;
}

std::optional<Integer> nth_root_exact(const Integer& a, unsigned long n) {
  if (n == 0) throw std::invalid_argument("0th root");
  if (a.sign() < 0 && n % 2 == 0) return std::nullopt;
  Integer r;
  int exact = mpz_root(r.raw(), a.raw(), n);
  if (!exact) return std::nullopt;
  return r;
}

std::pair<Integer, long> remove_factor(const Integer& a, const Integer& p) {
  if (a.is_zero()) throw std::domain_error("remove_factor of zero");
  Integer r;
  mp_bitcnt_t cnt = mpz_remove(r.raw(), a.raw(), p.raw());
  return {r, static_cast<long>(cnt)};
}

bool is_probable_prime(const Integer& n) { return mpz_probab_prime_p(n.raw(), 32) > 0; }

}  // namespace newred
