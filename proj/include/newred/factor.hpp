#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "newred/field.hpp"

namespace newred {

// Full factorization over Q is only attempted up to this degree; callers that
// need reducibility information for larger inputs go through the shifted
// binomial criterion instead.
inline constexpr int kFactorDegreeCap = 24;

class degree_cap_error : public std::runtime_error {
public:
  explicit degree_cap_error(const std::string& what) : std::runtime_error(what) {}
};

// unit * prod factor^mult == input; factors monic, irreducible, pairwise
// distinct, sorted by (degree, coefficients from the top)
template <class F>
struct Factorization {
  std::shared_ptr<const F> field;
  typename F::Elem unit;
  std::vector<std::pair<Poly<F>, int>> factors;

  Poly<F> expand() const {
    auto acc = Poly<F>::constant(field, unit);
    for (const auto& [g, e] : factors) acc = acc * pow(g, static_cast<unsigned long>(e));
    return acc;
  }
  bool single_irreducible() const { return factors.size() == 1 && factors[0].second == 1; }
};

// squarefree split: pairwise coprime monic parts g_i with f = lc * prod g_i^i.
// The rational version is Yun's algorithm; the finite-field version peels
// p-th powers through the Frobenius.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f);
std::vector<std::pair<FPoly, int>> squarefree_decomposition(const FPoly& f);

// complete factorization over F_q (distinct-degree then equal-degree split)
Factorization<GF> factor_mod_p(const FPoly& f);

// Rabin irreducibility test, any q
bool irreducible_gf(const FPoly& f);

// complete factorization over Q: primitive part, Yun split, factor modulo a
// good prime, Hensel lift to the coefficient bound, subset recombination.
// Throws degree_cap_error above kFactorDegreeCap except when the input is a
// shifted binomial that the power criterion decides irreducible.
Factorization<QQ> factor_over_q(const QPoly& f);

// deg 1 -> yes; deg 2 by discriminant; shifted binomials by the power
// criterion (works above the degree cap); then a modular degree-set sieve;
// full factorization only as a last resort.
bool irreducible_q(const QPoly& f);

// degrees of irreducible factors, with multiplicity, ascending
std::vector<int> degree_pattern(const QPoly& f);
std::vector<int> degree_pattern(const FPoly& f);

}  // namespace newred
