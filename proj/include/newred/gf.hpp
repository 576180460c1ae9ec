#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "newred/integer.hpp"

namespace newred {

// Finite field F_{p^n}. Elements are codes in [0, q): the base-p digits of the
// code are the coefficients of the residue polynomial in the generator g
// (constant digit first), so for prime fields the code is just the residue.
// Contexts carry their modulus; fields with different moduli never mix.
class GF {
public:
  using Elem = std::uint64_t;

  static std::shared_ptr<const GF> prime(std::uint64_t p);
  // default modulus: fixed table for p = 2, n <= 8; otherwise the first monic
  // irreducible of degree n in code order
  static std::shared_ptr<const GF> extension(std::uint64_t p, unsigned n);
  // modulus given by residue coefficients, index = degree; must be monic
  // irreducible of degree n over F_p (verified)
  static std::shared_ptr<const GF> extension(std::uint64_t p, unsigned n,
                                             const std::vector<std::uint64_t>& modulus);

  std::uint64_t p() const { return p_; }
  unsigned n() const { return n_; }
  std::uint64_t q() const { return q_; }
  bool is_prime_field() const { return n_ == 1; }
  const std::vector<std::uint64_t>& modulus() const { return mod_; }

  bool same(const GF& o) const { return p_ == o.p_ && n_ == o.n_ && mod_ == o.mod_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<Elem>(r);
  }
  Elem from_integer(const Integer& v) const;

  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  bool elem_less(Elem a, Elem b) const { return a < b; }
  std::uint64_t characteristic() const { return p_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // throws on zero
  Elem pow(Elem a, std::uint64_t e) const;
  Elem pow(Elem a, const Integer& e) const;  // e >= 0
  Elem frobenius(Elem a) const { return pow(a, p_); }
  Elem pth_root(Elem a) const;  // unique in char p
  Elem sqrt_char2(Elem a) const;

  std::vector<std::uint64_t> digits(Elem a) const;               // length n, index = degree
  Elem pack(const std::vector<std::uint64_t>& digits) const;     // inverse of the above
  std::string elem_str(Elem a) const;

private:
  GF(std::uint64_t p, unsigned n, std::vector<std::uint64_t> mod);
  void build_tables();
  Elem mul_generic(Elem a, Elem b) const;

  std::uint64_t p_ = 0;
  unsigned n_ = 1;
  std::uint64_t q_ = 0;
  std::vector<std::uint64_t> mod_;   // empty for prime fields
  std::vector<std::uint64_t> pw_;    // p^0..p^n
  // discrete log tables (extensions with q small enough)
  bool tables_ = false;
  std::vector<std::uint32_t> exp_, log_;
};

using GFPtr = std::shared_ptr<const GF>;

// absolute trace to F_p, returned as a residue in [0, p); identity on prime fields
std::uint64_t trace_to_prime(const GF& F, GF::Elem a);

// quadratic x^2 + a x + b over a finite field, given by its two coefficients
struct QuadParams {
  GF::Elem a, b;
};

// witness (a, b) with a != 0, Tr(1/a) = 0 and Tr(b/a^2) = 1, i.e. the second
// iterate of x^2+ax+b is newly reducible; needs char 2, n >= 2 (none exists
// over F_2, which is an error)
QuadParams fintwo_n22_witness(const GFPtr& F);

// witness a = b = 1/r with Tr(r) = 1: the third iterate is newly reducible;
// char 2, any n >= 1
QuadParams fintwo_n23_witness(const GFPtr& F);

}  // namespace newred
