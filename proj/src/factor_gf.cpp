#include <algorithm>
#include <random>
#include <stdexcept>

#include "newred/factor.hpp"

namespace newred {
namespace {

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

// f has zero derivative, so every exponent is a multiple of p; take the p-th
// root coefficientwise through the Frobenius
FPoly pth_root_poly(const FPoly& f) {
  const auto& fl = *f.field();
  auto p = static_cast<int>(fl.p());
  std::vector<GF::Elem> c(f.degree() / p + 1);
  for (size_t i = 0; i < c.size(); ++i) c[i] = fl.pth_root(f.coeff(static_cast<int>(i) * p));
  return FPoly(f.field(), std::move(c));
}

// f monic with deg >= 1; multiplicities emitted are scaled by `scale` so the
// recursion through p-th powers stays a single pass
void sqf_monic(const FPoly& f, int scale, std::vector<std::pair<FPoly, int>>& out) {
  auto fp = derivative(f);
  if (fp.is_zero()) {
    sqf_monic(pth_root_poly(f), scale * static_cast<int>(f.field()->p()), out);
    return;
  }
  auto c = gcd(f, fp);
  auto w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    auto y = gcd(w, c);
    auto z = w / y;
    if (z.degree() > 0) out.emplace_back(z, i * scale);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) sqf_monic(pth_root_poly(c), scale * static_cast<int>(f.field()->p()), out);
}

// distinct-degree split of a monic squarefree f: (product of all irreducible
// factors of degree d, d) pairs
std::vector<std::pair<FPoly, int>> ddf(const FPoly& f) {
  const auto& ctx = f.field();
  std::vector<std::pair<FPoly, int>> out;
  auto v = f;
  auto h = FPoly::x(ctx) % v;
  int d = 0;
  while (v.degree() >= 2 * (d + 1)) {
    ++d;
    h = pow_mod(h, ctx->q(), v);
    auto g = gcd(h - FPoly::x(ctx), v);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      v = v / g;
      h = h % v;
    }
  }
  if (v.degree() > 0) out.emplace_back(v, v.degree());
  return out;
}

FPoly random_poly(const std::shared_ptr<const GF>& ctx, int max_deg, std::mt19937_64& rng) {
  for (;;) {
    std::vector<GF::Elem> c(static_cast<size_t>(max_deg) + 1);
    for (auto& e : c) e = rng() % ctx->q();
    FPoly r(ctx, std::move(c));
    if (r.degree() >= 1) return r;
  }
}

// f monic, all irreducible factors of degree d
void edf(const FPoly& f, int d, std::mt19937_64& rng, std::vector<FPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const auto& ctx = f.field();
  auto split = [&](const FPoly& g) {
    edf(monic(g), d, rng, out);
    edf(f / g, d, rng, out);
  };
  Integer half = (pow_ui(Integer(static_cast<long long>(ctx->q())), d) - Integer(1)) / Integer(2);
  for (;;) {
    auto r = random_poly(ctx, f.degree() - 1, rng);
    auto g = gcd(r, f);
    if (g.degree() > 0 && g.degree() < f.degree()) return split(g);
    if (ctx->p() != 2) {
      auto s = pow_mod(r, half, f) - FPoly::one(ctx);
      g = gcd(s, f);
    } else {
      // sum of Frobenius iterates lands in F_2; its kernel splits f
      auto t = r;
      auto cur = r;
      int steps = static_cast<int>(ctx->n()) * d;
      for (int i = 1; i < steps; ++i) {
        cur = (cur * cur) % f;
        t = t + cur;
      }
      g = gcd(t, f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) return split(g);
  }
}

}  // namespace

std::vector<std::pair<FPoly, int>> squarefree_decomposition(const FPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
  std::vector<std::pair<FPoly, int>> out;
  if (f.degree() == 0) return out;
  sqf_monic(monic(f), 1, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return poly_less(a.first, b.first);
  });
  return out;
}

bool irreducible_gf(const FPoly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  auto fm = monic(f);
  const auto& ctx = f.field();
  int n = fm.degree();
  auto x = FPoly::x(ctx);
  std::vector<FPoly> saved(static_cast<size_t>(n) + 1);
  auto h = x % fm;
  saved[0] = h;
  for (int k = 1; k <= n; ++k) {
    h = pow_mod(h, ctx->q(), fm);
    saved[static_cast<size_t>(k)] = h;
  }
  if (!(saved[static_cast<size_t>(n)] == x % fm)) return false;
  for (int l : prime_divisors(n)) {
    auto g = gcd(saved[static_cast<size_t>(n / l)] - x, fm);
    if (g.degree() != 0) return false;
  }
  return true;
}

Factorization<GF> factor_mod_p(const FPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("factorization of zero");
  const auto& ctx = f.field();
  Factorization<GF> out{ctx, f.is_zero() ? ctx->zero() : f.lc(), {}};
  if (f.degree() == 0) return out;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (ctx->q() * 1000003ULL + static_cast<std::uint64_t>(f.degree())));
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const auto& [prod, d] : ddf(part)) {
      std::vector<FPoly> irr;
      edf(prod, d, rng, irr);
      for (auto& g : irr) out.factors.emplace_back(std::move(g), mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

std::vector<int> degree_pattern(const FPoly& f) {
  std::vector<int> out;
  for (const auto& [g, e] : factor_mod_p(f).factors)
    for (int i = 0; i < e; ++i) out.push_back(g.degree());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace newred
