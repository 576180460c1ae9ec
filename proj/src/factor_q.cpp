#include <algorithm>
#include <stdexcept>

#include "newred/criteria.hpp"
#include "newred/factor.hpp"

namespace newred {
namespace {

using ZPoly = std::vector<Integer>;  // dense, index = degree

int zdeg(const ZPoly& a) {
  int d = static_cast<int>(a.size()) - 1;
  while (d >= 0 && a[static_cast<size_t>(d)].is_zero()) --d;
  return d;
}

// f written as (sign * content / den) * primitive, primitive with positive
// leading coefficient and coprime coefficients
ZPoly to_primitive(const QPoly& f) {
  Integer den(1);
  for (int i = 0; i <= f.degree(); ++i) {
    Integer d = f.coeff(i).den();
    den = divexact(den * d, gcd(den, d));
  }
  ZPoly z(static_cast<size_t>(f.degree()) + 1);
  for (int i = 0; i <= f.degree(); ++i) {
    const auto& c = f.coeff(i);
    z[static_cast<size_t>(i)] = c.num() * divexact(den, c.den());
  }
  Integer content(0);
  for (const auto& c : z) content = gcd(content, c);
  if (z.back().sign() < 0) content = Integer(0) - content;
  for (auto& c : z) c = divexact(c, content);
  return z;
}

QPoly to_qpoly(const ZPoly& z) {
  std::vector<Rational> c(z.size());
  for (size_t i = 0; i < z.size(); ++i) c[i] = Rational(z[i]);
  return QPoly(QQ::ctx(), std::move(c));
}

FPoly reduce_mod(const ZPoly& z, const GFPtr& fp) {
  Integer p(static_cast<long long>(fp->p()));
  std::vector<GF::Elem> c(z.size());
  for (size_t i = 0; i < z.size(); ++i)
    c[i] = static_cast<GF::Elem>(mod_floor(z[i], p).to_ll());
  return FPoly(fp, std::move(c));
}

// odd primes not dividing the leading coefficient, with the reduction still
// squarefree; the input must be squarefree over Q
std::vector<GFPtr> good_primes(const ZPoly& z, int count) {
  std::vector<GFPtr> out;
  for (long long p = 3; static_cast<int>(out.size()) < count && p < 1000000; p += 2) {
    if (!is_probable_prime(Integer(p))) continue;
    if (mod_floor(z.back(), Integer(p)).is_zero()) continue;
    auto fp = GF::prime(static_cast<std::uint64_t>(p));
    auto fbar = reduce_mod(z, fp);
    if (gcd(fbar, derivative(fbar)).degree() != 0) continue;
    out.push_back(fp);
  }
  if (out.empty()) throw std::runtime_error("no good prime found");
  return out;
}

// 2^deg * l2 norm * |lc|: any integer divisor of z scaled to lc(z) has all
// coefficients below this
Integer factor_coeff_bound(const ZPoly& z) {
  Integer s(0);
  for (const auto& c : z) s += c * c;
  Integer l2 = sqrt_floor(s) + Integer(1);
  return pow_ui(Integer(2), static_cast<unsigned long>(zdeg(z))) * l2 * abs(z.back());
}

struct Lifted {
  GFPtr fp;
  std::vector<FPoly> base;    // monic factors mod p
  std::vector<ZPoly> factors; // lifted, coefficients in [0, modulus)
  Integer modulus;
};

// one linear Hensel step per prime power: the fixed mod-p Bezout basis
// sigma_i (partial fraction decomposition of 1 over the base factors) turns
// the current error into per-factor corrections
Lifted hensel_lift(const ZPoly& z, const GFPtr& fp, const std::vector<FPoly>& base,
                   const Integer& target) {
  Integer p(static_cast<long long>(fp->p()));
  size_t r = base.size();
  std::vector<FPoly> sigma(r);
  for (size_t i = 0; i < r; ++i) {
    auto pi = FPoly::one(fp);
    for (size_t j = 0; j < r; ++j)
      if (j != i) pi = (pi * base[j]) % base[i];
    auto [g, u, v] = ext_gcd(pi, base[i]);
    if (g.degree() != 0) throw std::runtime_error("modular factors not coprime");
    sigma[i] = scale(u, fp->inv(g.coeff(0))) % base[i];
  }

  Lifted st{fp, base, {}, p};
  st.factors.reserve(r);
  for (const auto& g : base) {
    ZPoly zg(static_cast<size_t>(g.degree()) + 1);
    for (int k = 0; k <= g.degree(); ++k)
      zg[static_cast<size_t>(k)] = Integer(static_cast<long long>(g.coeff(k)));
    st.factors.push_back(std::move(zg));
  }

  auto lc_inv = fp->inv(static_cast<GF::Elem>(mod_floor(z.back(), p).to_ll()));
  size_t n = z.size();
  while (st.modulus < target) {
    Integer next = st.modulus * p;
    ZPoly prod{z.back()};
    for (const auto& g : st.factors) {
      ZPoly t(prod.size() + g.size() - 1, Integer(0));
      for (size_t i = 0; i < prod.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) t[i + j] += prod[i] * g[j];
      for (auto& c : t) c = mod_floor(c, next);
      prod = std::move(t);
    }
    ZPoly e(n, Integer(0));
    for (size_t i = 0; i < n; ++i)
      e[i] = divexact(mod_floor(z[i] - (i < prod.size() ? prod[i] : Integer(0)), next),
                      st.modulus);
    auto ebar = reduce_mod(e, fp);
    for (size_t i = 0; i < r; ++i) {
      auto d = (scale(ebar, lc_inv) * sigma[i]) % base[i];
      for (int k = 0; k <= d.degree(); ++k)
        st.factors[i][static_cast<size_t>(k)] +=
            st.modulus * Integer(static_cast<long long>(d.coeff(k)));
    }
    st.modulus = next;
  }
  return st;
}

ZPoly symmetric_candidate(const std::vector<ZPoly>& lifted, const std::vector<size_t>& idx,
                          const Integer& lc, const Integer& modulus) {
  ZPoly prod{mod_floor(lc, modulus)};
  for (size_t i : idx) {
    const auto& g = lifted[i];
    ZPoly t(prod.size() + g.size() - 1, Integer(0));
    for (size_t a = 0; a < prod.size(); ++a)
      for (size_t b = 0; b < g.size(); ++b) t[a + b] += prod[a] * g[b];
    for (auto& c : t) c = mod_floor(c, modulus);
    prod = std::move(t);
  }
  Integer half = modulus / Integer(2);
  for (auto& c : prod)
    if (c > half) c -= modulus;
  Integer content(0);
  for (const auto& c : prod) content = gcd(content, c);
  if (zdeg(prod) >= 0 && prod[static_cast<size_t>(zdeg(prod))].sign() < 0)
    content = Integer(0) - content;
  if (!content.is_zero())
    for (auto& c : prod) c = divexact(c, content);
  return prod;
}

// Zassenhaus recombination, smallest subsets first
std::vector<ZPoly> recombine(const ZPoly& z, const Lifted& st) {
  std::vector<size_t> active(st.factors.size());
  for (size_t i = 0; i < active.size(); ++i) active[i] = i;
  std::vector<ZPoly> out;
  ZPoly rem = z;
  QPoly rem_q = to_qpoly(rem);

  size_t s = 1;
  while (2 * s <= active.size()) {
    bool hit = false;
    std::vector<size_t> take(s);
    // lexicographic s-combinations of positions in `active`
    for (size_t i = 0; i < s; ++i) take[i] = i;
    for (;;) {
      std::vector<size_t> idx(s);
      for (size_t i = 0; i < s; ++i) idx[i] = active[take[i]];
      auto cand = symmetric_candidate(st.factors, idx, rem.back(), st.modulus);
      if (zdeg(cand) >= 1) {
        auto [q, r] = divmod(rem_q, to_qpoly(cand));
        if (r.is_zero()) {
          out.push_back(cand);
          rem = to_primitive(q);
          rem_q = to_qpoly(rem);
          std::vector<size_t> next_active;
          for (size_t i = 0; i < active.size(); ++i)
            if (std::find(take.begin(), take.end(), i) == take.end())
              next_active.push_back(active[i]);
          active = std::move(next_active);
          hit = true;
          break;
        }
      }
      // advance combination
      size_t k = s;
      while (k > 0 && take[k - 1] == active.size() - s + (k - 1)) --k;
      if (k == 0) break;
      ++take[k - 1];
      for (size_t i = k; i < s; ++i) take[i] = take[i - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (zdeg(rem) >= 1) out.push_back(rem);
  return out;
}

// z primitive, squarefree, positive leading coefficient, degree >= 1
std::vector<ZPoly> factor_squarefree_primitive(const ZPoly& z) {
  if (zdeg(z) == 1) return {z};
  auto primes = good_primes(z, 5);
  GFPtr best;
  std::vector<FPoly> best_factors;
  for (const auto& fp : primes) {
    auto fac = factor_mod_p(reduce_mod(z, fp));
    std::vector<FPoly> fs;
    fs.reserve(fac.factors.size());
    for (auto& [g, e] : fac.factors) fs.push_back(g);
    if (fs.size() == 1) return {z};
    if (!best || fs.size() < best_factors.size()) {
      best = fp;
      best_factors = std::move(fs);
    }
  }
  Integer target = Integer(2) * factor_coeff_bound(z) + Integer(1);
  auto lifted = hensel_lift(z, best, best_factors, target);
  auto out = recombine(z, lifted);
  return out;
}

bool is_shifted_binomial(const QPoly& f, Rational& c_out) {
  int d = f.degree();
  if (d < 2) return false;
  Rational gamma = -f.coeff(d - 1) / (Rational(d) * f.lc());
  auto s = shift(f, gamma);
  for (int i = 1; i < d; ++i)
    if (!s.coeff(i).is_zero()) return false;
  c_out = -s.coeff(0) / f.lc();
  return true;
}

}  // namespace

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
  std::vector<std::pair<QPoly, int>> out;
  if (f.degree() == 0) return out;
  auto b = monic(f);
  auto fp = derivative(b);
  auto a0 = gcd(b, fp);
  if (a0.degree() == 0) {
    out.emplace_back(b, 1);
    return out;
  }
  b = b / a0;
  auto c = fp / a0;
  auto d = c - derivative(b);
  int i = 1;
  while (b.degree() > 0) {
    auto a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = b / a;
    c = d / a;
    d = c - derivative(b);
    ++i;
  }
  return out;
}

Factorization<QQ> factor_over_q(const QPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("factorization of zero");
  Factorization<QQ> out{QQ::ctx(), f.is_zero() ? Rational(0) : f.lc(), {}};
  if (f.degree() == 0) return out;
  if (f.degree() > kFactorDegreeCap) {
    Rational c;
    if (is_shifted_binomial(f, c) && xdc_irreducible(c, f.degree())) {
      out.factors.emplace_back(monic(f), 1);
      return out;
    }
    throw degree_cap_error("degree cap exceeded");
  }
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const auto& z : factor_squarefree_primitive(to_primitive(part)))
      out.factors.emplace_back(monic(to_qpoly(z)), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

bool irreducible_q(const QPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("irreducibility needs degree >= 1");
  int d = f.degree();
  if (d == 1) return true;
  if (d == 2) {
    auto disc = f.coeff(1) * f.coeff(1) - Rational(4) * f.coeff(2) * f.coeff(0);
    return !rational_is_square(disc).has_value();
  }
  Rational c;
  if (is_shifted_binomial(f, c)) return xdc_irreducible(c, d);
  if (d > kFactorDegreeCap) throw degree_cap_error("degree cap exceeded");
  if (gcd(f, derivative(f)).degree() != 0) return false;

  auto z = to_primitive(f);
  // degree-set sieve: subset sums of the modular factor degrees; a proper
  // rational factor degree must be achievable modulo every good prime
  std::uint64_t acc = ~0ULL;
  for (const auto& fp : good_primes(z, 5)) {
    auto fac = factor_mod_p(reduce_mod(z, fp));
    if (fac.factors.size() == 1) return true;
    std::uint64_t sums = 1;  // bit k: some subset has total degree k
    for (const auto& [g, e] : fac.factors) sums |= sums << g.degree();
    acc &= sums;
    std::uint64_t proper = acc & ~1ULL & ~(1ULL << d);
    if (proper == 0) return true;
  }
  return factor_over_q(f).single_irreducible();
}

std::vector<int> degree_pattern(const QPoly& f) {
  std::vector<int> out;
  for (const auto& [g, e] : factor_over_q(f).factors)
    for (int i = 0; i < e; ++i) out.push_back(g.degree());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace newred
