#pragma once

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace newred {

static_assert(sizeof(long) == 8, "assumes LP64 (long long fits mpz_set_si)");

// Arbitrary-precision integer. Thin value-semantic wrapper over GMP's mpz_t;
// only the operations the rest of the library needs.
class Integer {
public:
  Integer() { mpz_init(z_); }
  Integer(long long v) { mpz_init_set_si(z_, static_cast<long>(v)); }
  explicit Integer(const std::string& s);
  Integer(const Integer& o) { mpz_init_set(z_, o.z_); }
  Integer(Integer&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  Integer& operator=(const Integer& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  Integer& operator=(Integer&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~Integer() { mpz_clear(z_); }

  mpz_srcptr raw() const { return z_; }
  mpz_ptr raw() { return z_; }

  int sign() const { return mpz_sgn(z_); }
  bool is_zero() const { return mpz_sgn(z_) == 0; }
  bool is_one() const { return mpz_cmp_ui(z_, 1) == 0; }
  bool odd() const { return mpz_odd_p(z_) != 0; }

  bool fits_ll() const { return mpz_fits_slong_p(z_) != 0; }
  long long to_ll() const;  // throws if out of range
  std::string str() const;

  size_t bit_length() const { return mpz_sizeinbase(z_, 2); }
  bool bit(size_t i) const { return mpz_tstbit(z_, i) != 0; }

  Integer& operator+=(const Integer& o) {
    mpz_add(z_, z_, o.z_);
    return *this;
  }
  Integer& operator-=(const Integer& o) {
    mpz_sub(z_, z_, o.z_);
    return *this;
  }
  Integer& operator*=(const Integer& o) {
    mpz_mul(z_, z_, o.z_);
    return *this;
  }

  friend Integer operator+(const Integer& a, const Integer& b) {
    Integer r;
    mpz_add(r.z_, a.z_, b.z_);
    return r;
  }
  friend Integer operator-(const Integer& a, const Integer& b) {
    Integer r;
    mpz_sub(r.z_, a.z_, b.z_);
    return r;
  }
  friend Integer operator-(const Integer& a) {
    Integer r;
    mpz_neg(r.z_, a.z_);
    return r;
  }
  friend Integer operator*(const Integer& a, const Integer& b) {
    Integer r;
    mpz_mul(r.z_, a.z_, b.z_);
    return r;
  }
  // quotient truncated toward zero, like C++ integer division
  friend Integer operator/(const Integer& a, const Integer& b);
  friend Integer operator%(const Integer& a, const Integer& b);

  friend bool operator==(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_) == 0; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    int c = mpz_cmp(a.z_, b.z_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpz_t z_;
};

Integer abs(const Integer& a);
Integer gcd(const Integer& a, const Integer& b);
Integer divexact(const Integer& a, const Integer& b);
// residue in [0, m) for m > 0
Integer mod_floor(const Integer& a, const Integer& m);
Integer pow_ui(const Integer& base, unsigned long e);
Integer sqrt_floor(const Integer& a);  // a >= 0
bool is_perfect_square(const Integer& a);
// exact n-th root if one exists (negative a allowed for odd n)
std::optional<Integer> nth_root_exact(const Integer& a, unsigned long n);
// (a with all factors p removed, number of factors removed); a != 0
std::pair<Integer, long> remove_factor(const Integer& a, const Integer& p);
bool is_probable_prime(const Integer& n);

}  // namespace newred
