#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "newred/criteria.hpp"
#include "newred/field.hpp"
#include "newred/integer.hpp"
#include "newred/poly.hpp"
#include "newred/rational.hpp"

namespace newred {

// A hypothesis attached to a family member, recorded together with its truth
// value over Q so callers can see exactly which guarantees are active for the
// chosen parameters.
struct SideCondition {
  std::string label;
  bool holds = false;
};

// Output of a family generator: the polynomial, the iterate it targets, and
// certificate data sufficient to verify the prediction independently.
//
// Certificates come in three shapes, any subset of which may be populated:
//   predicted_factors  explicit factors of f^n (product equals iterate(f, n))
//   mirror_half        h with  mirror_scale * f^n(x + gamma) == h(x) * h(-x)
//   even_half          p with  f^n(x + gamma) == p(x^2) * p(-x^2)
struct FamilyMember {
  std::string name;
  std::vector<Rational> params;
  QPoly f;
  int n = 2;  // iterate predicted to turn reducible
  Rational gamma;  // conjugation shift used by the identities below
  std::vector<int> factor_degrees;      // predicted degree split of f^n
  // true when factor_degrees is the exact irreducible pattern; false when it
  // only names a coarser split (the pieces may factor further)
  bool degrees_exact = true;
  std::vector<QPoly> predicted_factors;  // explicit factors of f^n, if known
  std::optional<QPoly> mirror_half;
  Rational mirror_scale = Rational(1);
  std::optional<QPoly> even_half;
  std::optional<QuadNormalForm> nf;  // set for the quadratic families
  std::vector<std::pair<std::string, Rational>> quantities;
  std::vector<SideCondition> conditions;

  bool all_conditions_hold() const;
};

// Quadratic with split second iterate: f = (x - (3a-2))^2 + 4a - 4.  The two
// quadratic factors of f^2 are returned explicitly; f^2 is newly reducible
// exactly when 1 - a is not a square.
FamilyMember quad_n22(const Rational& a);

// Two-parameter quadratic surface covering every monic quadratic whose third
// iterate splits into a degree-8 product h(x)h(-x) after centering.  Requires
// r != 0.  Returns h (leading coefficient 64r^2) and the square-class
// shortcuts for the two irreducibility obligations.
FamilyMember quad_n23_surface(const Rational& r, const Rational& s);

// The m = -1 slice of the surface, parametrized by t with
// gamma = 4*((t^2-8t+8)(t^2+8)/(t^2-8)^2)^4 + 1.
FamilyMember quad_m_minus1(const Rational& t);

// Guarded form with t = 25r and v_5(r) >= 0, which forces v_5(gamma) odd and
// hence a newly reducible third iterate over Q.
FamilyMember quad_m_minus1_guarded(const Rational& r);

// Non-constant-m quadratic family indexed by an integer k with |k| >= 2 and
// 3 not dividing k: m = k^4 - 2k^2 - 1 and gamma per the closed formula.
// Certificate: -m-gamma < 0 and the square-free cofactor of m^2+m+gamma is
// 2 mod 3.
FamilyMember quad_newfamily(const Integer& k);

// Depressed cubics (x - gamma)^3 + b + gamma with newly reducible second
// iterate; variant 1 has b = 36t^3, variant 2 has b = -9t^3.  Requires t != 0.
FamilyMember cubic_family(int variant, const Rational& t);

// Quartic surface: f = (x - gamma)^4 + m + gamma with
// f^2(x + gamma) = p(x^2) p(-x^2); requires r != s^2.  Returns p explicitly.
FamilyMember quartic_surface(const Rational& r, const Rational& s);

// One-parameter slice of the quartic surface at (r, s) = (48t^2, 4t):
// f = (x + 192t^8 - 7t^2)^4 - 192t^8, newly reducible second iterate over Q
// for every t != 0.
FamilyMember quartic_t(const Rational& t);

// Degree d = 2 mod 4 binomial family f = (x - 4k^4)^d + 4k^4.  The second
// iterate is always reducible; f itself is irreducible whenever -4k^4 avoids
// p-th powers for the odd primes p | d.
FamilyMember highdeg_family(long d, const Rational& k);

// Deterministic restartable stream of parameters k = p^x for highdeg_family:
// the exponents x satisfy x = (1 - 2*v_p(2)) / 4 mod q for every odd prime
// q | d, which makes v_p(-4k^4) avoid every multiple of q and hence makes
// (x - 4k^4)^d + 4k^4 irreducible over Q.  Position j always yields the same
// value.
class GenbigdStream {
 public:
  GenbigdStream(long d, const Integer& p);

  Integer at(std::size_t j) const;
  Integer next() { return at(j_++); }
  void reset() { j_ = 0; }

  long exponent_base() const { return x0_; }
  long exponent_step() const { return step_; }

 private:
  Integer p_;
  long x0_ = 0;
  long step_ = 1;
  std::size_t j_ = 0;
};

GenbigdStream genbigd_k_stream(long d, const Integer& p);

// Construct a member by family name with positional parameters. Names match
// the generators above: n22, n23_surface, m_minus1, m_minus1_guarded,
// newfamily, cubic, quartic_surface, quartic_t, highdeg. Throws
// std::invalid_argument for an unknown name or wrong parameter count.
FamilyMember family_by_name(const std::string& name, const std::vector<Rational>& params);

}  // namespace newred
