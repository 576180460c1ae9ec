#include <algorithm>
#include <atomic>

#include "newred/criteria.hpp"

namespace newred {
namespace {

std::atomic<long> violation_count{0};

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

template <class F>
typename F::Elem elem_pow(const F& fl, typename F::Elem base, std::uint64_t e) {
  auto acc = fl.one();
  while (e) {
    if (e & 1) acc = fl.mul(acc, base);
    e >>= 1;
    if (e) base = fl.mul(base, base);
  }
  return acc;
}

std::vector<GF::Elem> poly_roots(const FPoly& f) {
  std::vector<GF::Elem> out;
  for (const auto& [g, e] : factor_mod_p(f).factors)
    if (g.degree() == 1) out.push_back(f.field()->neg(g.coeff(0)));
  return out;
}

template <class F>
std::optional<Poly<F>> split_against_witness(const Poly<F>& f,
                                             const NewlyReducibleWitness<F>& w) {
  if (f.degree() != 2) throw std::invalid_argument("symmetric split needs a quadratic");
  const auto& fl = *f.field();
  auto a = f.lc();
  auto boa = fl.mul(f.coeff(1), fl.inv(a));
  auto fn = iterate(f, w.n);
  auto unit = elem_pow(fl, a, (std::uint64_t{1} << w.n) - 1);
  // x -> -(x + b/a)
  Poly<F> mirror(f.field(), {fl.neg(boa), fl.neg(fl.one())});
  for (const auto& [h, mult] : w.factors.factors) {
    auto partner = compose(h, mirror);
    if (scale(h * partner, unit) == fn) return h;
  }
  ++violation_count;
  throw structure_violation("structure violation");
}

}  // namespace

structure_violation::structure_violation(const std::string& what) : std::runtime_error(what) {}

long structure_violation_count() { return violation_count.load(); }

QuadNormalForm QuadNormalForm::from_monic(const Rational& a, const Rational& b) {
  Rational gamma = -a / Rational(2);
  Rational m = b + a / Rational(2) - a * a / Rational(4);
  return {gamma, m};
}

std::optional<QuadNormalForm> QuadNormalForm::of(const QPoly& f) {
  if (f.degree() != 2 || !f.is_monic()) return std::nullopt;
  return from_monic(f.coeff(1), f.coeff(0));
}

Rational QuadNormalForm::coeff_a() const { return -Rational(2) * gamma; }

Rational QuadNormalForm::coeff_b() const { return gamma * gamma + gamma + m; }

QPoly QuadNormalForm::to_poly() const {
  return QPoly(QQ::ctx(), {coeff_b(), coeff_a(), Rational(1)});
}

Rational critical_orbit_value(const QuadNormalForm& nf, int n) {
  Rational u(0);
  for (int i = 0; i < n; ++i) u = u * u + nf.m;
  return u + nf.gamma;
}

bool second_iter_symmetric(const Rational& gamma, const Rational& m) {
  auto e = rational_is_square(m * m + m + gamma);
  if (!e) return false;
  Rational two_e = Rational(2) * *e;
  Rational minus_2m = -Rational(2) * m;
  return rational_is_square(minus_2m + two_e).has_value() ||
         rational_is_square(minus_2m - two_e).has_value();
}

bool third_iter_condition2(const Rational& gamma, const Rational& m) {
  return !rational_is_square(-m - gamma).has_value() && !second_iter_symmetric(gamma, m);
}

bool xdc_irreducible(const Rational& c, int d) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  if (d == 1) return true;
  if (c.is_zero()) return false;
  for (int p : prime_divisors(d))
    if (is_nth_power(c, static_cast<unsigned long>(p)).has_value()) return false;
  if (d % 4 == 0 && in_minus4_fourth_powers(c).has_value()) return false;
  return true;
}

bool xdc_irreducible_gf(const GFPtr& field, GF::Elem c, int d) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  if (d == 1) return true;
  if (c == 0) return false;
  std::uint64_t q1 = field->q() - 1;
  for (int p : prime_divisors(d)) {
    if (static_cast<std::uint64_t>(p) == field->p()) return false;  // Frobenius is onto
    std::uint64_t g = q1 % static_cast<std::uint64_t>(p) == 0 ? static_cast<std::uint64_t>(p) : 1;
    if (field->pow(c, q1 / g) == field->one()) return false;
  }
  if (d % 4 == 0 && field->p() != 2) {
    auto t = field->mul(c, field->inv(field->from_int(-4)));
    std::uint64_t g = q1 % 4 == 0 ? 4 : (q1 % 2 == 0 ? 2 : 1);
    if (field->pow(t, q1 / g) == field->one()) return false;
  }
  return true;
}

std::optional<FPoly> char2_second_iter(const GFPtr& field, GF::Elem a, GF::Elem b) {
  if (field->p() != 2) throw std::invalid_argument("characteristic 2 required");
  const auto& fl = *field;
  auto e = fl.add(fl.add(fl.mul(b, b), fl.mul(a, b)), b);
  std::vector<std::pair<GF::Elem, GF::Elem>> cands;  // (d, c)
  if (a == 0) {
    cands.emplace_back(fl.sqrt_char2(e), fl.zero());
  } else {
    auto a2 = fl.mul(a, a);
    auto a3 = fl.mul(a2, a);
    FPoly quartic(field, {fl.mul(e, e), fl.mul(a2, e), a3, a2, fl.one()});
    for (auto d : poly_roots(quartic)) {
      if (d == 0) continue;
      auto num = fl.add(fl.add(fl.mul(a2, d), fl.mul(d, d)), e);
      cands.emplace_back(d, fl.mul(num, fl.inv(fl.mul(a, d))));
    }
    if (e == 0) {
      FPoly quad(field, {a, a, fl.one()});
      for (auto c : poly_roots(quad)) cands.emplace_back(fl.zero(), c);
    }
  }
  std::sort(cands.begin(), cands.end(), [&](const auto& x, const auto& y) {
    if (!fl.eq(x.first, y.first)) return fl.elem_less(x.first, y.first);
    return fl.elem_less(x.second, y.second);
  });
  FPoly f(field, {b, a, fl.one()});
  auto f2 = iterate(f, 2);
  for (const auto& [d, c] : cands) {
    FPoly h(field, {d, c, fl.one()});
    if (h * shift(h, a) == f2) return h;
  }
  return std::nullopt;
}

std::optional<NewlyReducibleWitness<QQ>> newly_reducible(const QPoly& f, int n,
                                                         bool use_fast_paths) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (f.degree() < 2) throw std::invalid_argument("degree must be at least 2");
  std::optional<QuadNormalForm> nf;
  if (use_fast_paths) nf = QuadNormalForm::of(f);
  NewlyReducibleWitness<QQ> w;
  w.n = n;

  if (nf) {
    bool irr1 = !rational_is_square(-nf->m - nf->gamma).has_value();
    w.chain.push_back(irr1);
    if (!irr1) return std::nullopt;
    if (n >= 3) {
      bool irr2 = !second_iter_symmetric(nf->gamma, nf->m);
      w.chain.push_back(irr2);
      if (!irr2) return std::nullopt;
    }
    for (int k = 3; k < n; ++k) {
      // a square critical orbit value is necessary for the k-th iterate to
      // split, so a non-square settles irreducibility without factoring
      bool irr = !rational_is_square(critical_orbit_value(*nf, k)).has_value() ||
                 irreducible_q(iterate(f, k));
      w.chain.push_back(irr);
      if (!irr) return std::nullopt;
    }
    if (n == 2) {
      if (!second_iter_symmetric(nf->gamma, nf->m)) return std::nullopt;
    } else {
      if (!rational_is_square(critical_orbit_value(*nf, n)).has_value()) return std::nullopt;
    }
    w.factors = factor_over_q(iterate(f, n));
    if (w.factors.single_irreducible()) {
      if (n == 2) {
        ++violation_count;
        throw structure_violation("second iterate criterion and factorization disagree");
      }
      return std::nullopt;
    }
    return w;
  }

  for (int k = 1; k < n; ++k) {
    bool irr = irreducible_q(iterate(f, k));
    w.chain.push_back(irr);
    if (!irr) return std::nullopt;
  }
  w.factors = factor_over_q(iterate(f, n));
  if (w.factors.single_irreducible()) return std::nullopt;
  return w;
}

std::optional<NewlyReducibleWitness<GF>> newly_reducible(const FPoly& f, int n,
                                                         bool /*use_fast_paths*/) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (f.degree() < 2) throw std::invalid_argument("degree must be at least 2");
  NewlyReducibleWitness<GF> w;
  w.n = n;
  for (int k = 1; k < n; ++k) {
    bool irr = irreducible_gf(iterate(f, k));
    w.chain.push_back(irr);
    if (!irr) return std::nullopt;
  }
  w.factors = factor_mod_p(iterate(f, n));
  if (w.factors.single_irreducible()) return std::nullopt;
  return w;
}

std::optional<QPoly> symmetric_split(const QPoly& f, const NewlyReducibleWitness<QQ>& w) {
  return split_against_witness(f, w);
}

std::optional<FPoly> symmetric_split(const FPoly& f, const NewlyReducibleWitness<GF>& w) {
  return split_against_witness(f, w);
}

std::optional<QPoly> symmetric_split(const QPoly& f, int n) {
  auto w = newly_reducible(f, n);
  if (!w) throw std::invalid_argument("n-th iterate is not newly reducible");
  return split_against_witness(f, *w);
}

std::optional<FPoly> symmetric_split(const FPoly& f, int n) {
  auto w = newly_reducible(f, n);
  if (!w) throw std::invalid_argument("n-th iterate is not newly reducible");
  return split_against_witness(f, *w);
}

std::array<Rational, 8> s4_residual(const Rational& m, const Rational& gamma,
                                    const std::array<Rational, 8>& a) {
  Rational m2 = m * m, m3 = m2 * m, m4 = m3 * m, m5 = m4 * m, m6 = m5 * m, m7 = m6 * m,
           m8 = m7 * m;
  auto r = [](long long k) { return Rational(k); };
  std::array<Rational, 8> out;
  out[0] = gamma + m8 + r(4) * m7 + r(6) * m6 + r(6) * m5 + r(5) * m4 + r(2) * m3 + m2 + m -
           a[0] * a[0];
  out[1] = r(8) * m7 + r(24) * m6 + r(24) * m5 + r(16) * m4 + r(8) * m3 -
           (r(2) * a[0] * a[2] - a[1] * a[1]);
  out[2] = r(28) * m6 + r(60) * m5 + r(36) * m4 + r(16) * m3 + r(4) * m2 -
           (a[2] * a[2] - r(2) * a[1] * a[3] + r(2) * a[0] * a[4]);
  out[3] = r(56) * m5 + r(80) * m4 + r(24) * m3 + r(8) * m2 -
           (-(a[3] * a[3]) + r(2) * a[2] * a[4] - r(2) * a[1] * a[5] + r(2) * a[0] * a[6]);
  out[4] = r(70) * m4 + r(60) * m3 + r(6) * m2 + r(2) * m -
           (a[4] * a[4] + r(2) * a[0] - r(2) * a[3] * a[5] + r(2) * a[2] * a[6] -
            r(2) * a[1] * a[7]);
  out[5] = r(56) * m3 + r(24) * m2 -
           (-(a[5] * a[5]) + r(2) * a[2] + r(2) * a[4] * a[6] - r(2) * a[3] * a[7]);
  out[6] = r(28) * m2 + r(4) * m - (a[6] * a[6] + r(2) * a[4] - r(2) * a[5] * a[7]);
  out[7] = r(8) * m - (r(2) * a[6] - a[7] * a[7]);
  return out;
}

}  // namespace newred
