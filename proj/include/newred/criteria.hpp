#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "newred/factor.hpp"

namespace newred {

// Thrown when a structural identity that is supposed to hold for every
// witness fails on a concrete one. The harness asserts the counter stays 0.
class structure_violation : public std::runtime_error {
public:
  explicit structure_violation(const std::string& what);
};
long structure_violation_count();

// monic quadratic written as f(x) = (x - gamma)^2 + gamma + m, so that
// f^n(x + gamma) is an even polynomial and gamma is the critical point
struct QuadNormalForm {
  Rational gamma;
  Rational m;

  // from f = x^2 + ax + b: gamma = -a/2, m = b + a/2 - a^2/4
  static QuadNormalForm from_monic(const Rational& a, const Rational& b);
  // engaged only for monic quadratics
  static std::optional<QuadNormalForm> of(const QPoly& f);

  Rational coeff_a() const;  // -2 gamma
  Rational coeff_b() const;  // gamma^2 + gamma + m
  QPoly to_poly() const;
};

// f^n(gamma): iterate 0 -> u^2 + m n times, then add gamma. If f^n splits as
// H(x + gamma) * H(-(x + gamma)) this value is H(0)^2, so a non-square value
// rules the split out without factoring.
Rational critical_orbit_value(const QuadNormalForm& nf, int n);

template <class F>
struct NewlyReducibleWitness {
  int n = 0;
  std::vector<bool> chain;   // irreducibility of f^1 .. f^{n-1}
  Factorization<F> factors;  // of f^n
};

// witness iff f^{n-1} is irreducible and f^n is not. use_fast_paths = false
// forces the plain factorization route (used as an independent oracle).
std::optional<NewlyReducibleWitness<QQ>> newly_reducible(const QPoly& f, int n,
                                                         bool use_fast_paths = true);
std::optional<NewlyReducibleWitness<GF>> newly_reducible(const FPoly& f, int n,
                                                         bool use_fast_paths = true);

// For quadratic f = ax^2+bx+c with newly reducible n-th iterate, returns the
// monic irreducible h of degree 2^{n-1} with
//   f^n(x) = a^{2^n - 1} h(x) h(-(x + b/a)).
// Throws std::invalid_argument when f^n is not newly reducible and
// structure_violation if no factor of f^n satisfies the identity.
std::optional<QPoly> symmetric_split(const QPoly& f, int n);
std::optional<FPoly> symmetric_split(const FPoly& f, int n);
std::optional<QPoly> symmetric_split(const QPoly& f, const NewlyReducibleWitness<QQ>& w);
std::optional<FPoly> symmetric_split(const FPoly& f, const NewlyReducibleWitness<GF>& w);

// true iff f^2(x + gamma) = H(x) H(-x) for a quadratic H, i.e. iff
// m^2 + m + gamma = e^2 with e rational and -2m + 2e or -2m - 2e is a square
bool second_iter_symmetric(const Rational& gamma, const Rational& m);

// true iff none of sqrt(-m-gamma), sqrt(-2m +- 2 sqrt(m^2+m+gamma)) is
// rational; equivalently f and f^2 are both irreducible
bool third_iter_condition2(const Rational& gamma, const Rational& m);

// char-2 split of the second iterate of f = x^2 + ax + b: h = x^2 + cx + d
// with f^2(x) = h(x) h(x+a) if one exists. Candidates come from the roots of
//   x^4 + a^2 x^3 + a^3 x^2 + a^2 e x + e^2,   e = b^2 + ab + b,
// and every candidate is verified against the identity before returning.
std::optional<FPoly> char2_second_iter(const GFPtr& field, GF::Elem a, GF::Elem b);

// x^d - c irreducible iff c is not a p-th power for any prime p | d, and
// additionally c is not in -4 K^4 when 4 | d
bool xdc_irreducible(const Rational& c, int d);
bool xdc_irreducible_gf(const GFPtr& field, GF::Elem c, int d);

// left minus right of the eight coefficient equations for
// f^4(x + gamma) = h(x) h(-x), h = x^8 + a7 x^7 + ... + a0; the zero vector
// means (a0..a7) really is such an h
std::array<Rational, 8> s4_residual(const Rational& m, const Rational& gamma,
                                    const std::array<Rational, 8>& a);

// every factor degree of the witness divisible by d^{n-1}
template <class F>
bool deglem_check(const NewlyReducibleWitness<F>& w, int d) {
  Integer want = pow_ui(Integer(d), static_cast<unsigned long>(w.n - 1));
  if (!want.fits_ll()) return false;
  long long q = want.to_ll();
  for (const auto& [g, e] : w.factors.factors)
    if (g.degree() % q != 0) return false;
  return true;
}

}  // namespace newred
