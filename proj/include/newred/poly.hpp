#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "newred/integer.hpp"

namespace newred {

// degree guard for compose/iterate/pow; nothing in scope needs more
inline constexpr long kMaxPolyDegree = 10000;

// Dense univariate polynomial over a field F. F supplies element type and
// arithmetic (see QQ and GF); a polynomial carries a shared handle to its
// field and refuses to mix with polynomials over a different context.
template <class F>
class Poly {
public:
  using Elem = typename F::Elem;
  using Ctx = std::shared_ptr<const F>;

  Poly() = default;
  explicit Poly(Ctx f) : f_(std::move(f)) {}
  Poly(Ctx f, std::vector<Elem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) { trim(); }

  static Poly zero(Ctx f) { return Poly(std::move(f)); }
  static Poly constant(Ctx f, const Elem& e) { return Poly(std::move(f), {e}); }
  static Poly one(Ctx f) {
    auto e = f->one();
    return Poly(std::move(f), {e});
  }
  static Poly x(Ctx f) {
    std::vector<Elem> c{f->zero(), f->one()};
    return Poly(std::move(f), std::move(c));
  }

  const Ctx& field() const { return f_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Elem coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return f_->zero();
    return c_[i];
  }
  const Elem& lc() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && f_->eq(c_.back(), f_->one()); }

  void set_coeff(int i, const Elem& e) {
    if (i < 0) throw std::invalid_argument("negative degree");
    if (i >= static_cast<int>(c_.size())) c_.resize(i + 1, f_->zero());
    c_[i] = e;
    trim();
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!a.f_->eq(a.c_[i], b.c_[i])) return false;
    return true;
  }

private:
  void trim() {
    while (!c_.empty() && f_->is_zero(c_.back())) c_.pop_back();
  }

  Ctx f_;
  std::vector<Elem> c_;
};

namespace detail {
template <class F>
void check_ctx(const Poly<F>& a, const Poly<F>& b) {
  if (!a.field() || !b.field() || !a.field()->same(*b.field()))
    throw std::invalid_argument("field context mismatch");
}
}  // namespace detail

template <class F>
Poly<F> operator+(const Poly<F>& a, const Poly<F>& b) {
  detail::check_ctx(a, b);
  const auto& f = *a.field();
  std::vector<typename F::Elem> c(std::max(a.coeffs().size(), b.coeffs().size()), f.zero());
  for (size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly<F>(a.field(), std::move(c));
}

template <class F>
Poly<F> operator-(const Poly<F>& a, const Poly<F>& b) {
  detail::check_ctx(a, b);
  const auto& f = *a.field();
  std::vector<typename F::Elem> c(std::max(a.coeffs().size(), b.coeffs().size()), f.zero());
  for (size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
  return Poly<F>(a.field(), std::move(c));
}

template <class F>
Poly<F> operator-(const Poly<F>& a) {
  const auto& f = *a.field();
  auto c = a.coeffs();
  for (auto& e : c) e = f.neg(e);
  return Poly<F>(a.field(), std::move(c));
}

template <class F>
Poly<F> operator*(const Poly<F>& a, const Poly<F>& b) {
  detail::check_ctx(a, b);
  const auto& f = *a.field();
  if (a.is_zero() || b.is_zero()) return Poly<F>::zero(a.field());
  std::vector<typename F::Elem> c(a.coeffs().size() + b.coeffs().size() - 1, f.zero());
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    if (f.is_zero(a.coeffs()[i])) continue;
    for (size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] = f.add(c[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
  }
  return Poly<F>(a.field(), std::move(c));
}

template <class F>
Poly<F> scale(const Poly<F>& a, const typename F::Elem& s) {
  const auto& f = *a.field();
  auto c = a.coeffs();
  for (auto& e : c) e = f.mul(e, s);
  return Poly<F>(a.field(), std::move(c));
}

template <class F>
Poly<F> monic(const Poly<F>& a) {
  if (a.is_zero()) return a;
  return scale(a, a.field()->inv(a.lc()));
}

template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
  detail::check_ctx(a, b);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const auto& f = *a.field();
  if (a.degree() < b.degree()) return {Poly<F>::zero(a.field()), a};
  auto lcinv = f.inv(b.lc());
  std::vector<typename F::Elem> rem = a.coeffs();
  std::vector<typename F::Elem> quo(a.degree() - b.degree() + 1, f.zero());
  for (int i = a.degree(); i >= b.degree(); --i) {
    if (f.is_zero(rem[i])) continue;
    auto t = f.mul(rem[i], lcinv);
    quo[i - b.degree()] = t;
    for (int j = 0; j <= b.degree(); ++j)
      rem[i - b.degree() + j] = f.sub(rem[i - b.degree() + j], f.mul(t, b.coeff(j)));
  }
  return {Poly<F>(a.field(), std::move(quo)), Poly<F>(a.field(), std::move(rem))};
}

template <class F>
Poly<F> operator/(const Poly<F>& a, const Poly<F>& b) {
  return divmod(a, b).first;
}

template <class F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
  return divmod(a, b).second;
}

// monic gcd; gcd(0, 0) = 0
template <class F>
Poly<F> gcd(const Poly<F>& a, const Poly<F>& b) {
  detail::check_ctx(a, b);
  Poly<F> u = a, v = b;
  while (!v.is_zero()) {
    auto r = u % v;
    u = std::move(v);
    v = std::move(r);
  }
  return monic(u);
}

// g, u, v with g = gcd(a,b) monic and u*a + v*b = g
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> ext_gcd(const Poly<F>& a, const Poly<F>& b) {
  detail::check_ctx(a, b);
  auto zero = Poly<F>::zero(a.field()), one = Poly<F>::one(a.field());
  Poly<F> r0 = a, r1 = b, s0 = one, s1 = zero, t0 = zero, t1 = one;
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    auto s2 = s0 - q * s1;
    auto t2 = t0 - q * t1;
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  auto inv = a.field()->inv(r0.lc());
  return {scale(r0, inv), scale(s0, inv), scale(t0, inv)};
}

template <class F>
typename F::Elem evaluate(const Poly<F>& a, const typename F::Elem& x) {
  const auto& f = *a.field();
  auto acc = f.zero();
  for (int i = a.degree(); i >= 0; --i) acc = f.add(f.mul(acc, x), a.coeff(i));
  return acc;
}

// f(g(x)) by Horner over polynomials
template <class F>
Poly<F> compose(const Poly<F>& f, const Poly<F>& g) {
  detail::check_ctx(f, g);
  if (f.degree() >= 1 && g.degree() >= 1 &&
      static_cast<long>(f.degree()) * g.degree() > kMaxPolyDegree)
    throw std::invalid_argument("compose degree guard exceeded");
  auto acc = Poly<F>::zero(f.field());
  for (int i = f.degree(); i >= 0; --i) {
    acc = acc * g;
    acc.set_coeff(0, f.field()->add(acc.coeff(0), f.coeff(i)));
  }
  return acc;
}

// n-th iterate; iterate(f, 0) = x
template <class F>
Poly<F> iterate(const Poly<F>& f, int n) {
  if (n < 0) throw std::invalid_argument("negative iterate");
  if (n == 0) return Poly<F>::x(f.field());
  if (f.degree() < 1) throw std::invalid_argument("iterate needs degree >= 1");
  double dd = 1;
  for (int i = 0; i < n; ++i) {
    dd *= f.degree();
    if (dd > kMaxPolyDegree) throw std::invalid_argument("iterate degree guard exceeded");
  }
  auto acc = f;
  for (int i = 1; i < n; ++i) acc = compose(acc, f);
  return acc;
}

// f(x + c)
template <class F>
Poly<F> shift(const Poly<F>& f, const typename F::Elem& c) {
  auto xpc = Poly<F>::x(f.field());
  xpc.set_coeff(0, c);
  return compose(f, xpc);
}

// f(-x)
template <class F>
Poly<F> reflect(const Poly<F>& f) {
  const auto& fl = *f.field();
  auto c = f.coeffs();
  for (size_t i = 1; i < c.size(); i += 2) c[i] = fl.neg(c[i]);
  return Poly<F>(f.field(), std::move(c));
}

template <class F>
Poly<F> derivative(const Poly<F>& f) {
  const auto& fl = *f.field();
  if (f.degree() < 1) return Poly<F>::zero(f.field());
  std::vector<typename F::Elem> c(f.degree());
  for (int i = 1; i <= f.degree(); ++i) {
    auto k = fl.from_int(i);
    c[i - 1] = fl.mul(k, f.coeff(i));
  }
  return Poly<F>(f.field(), std::move(c));
}

template <class F>
Poly<F> pow(const Poly<F>& base, unsigned long e) {
  if (base.degree() >= 1 && static_cast<double>(base.degree()) * e > kMaxPolyDegree)
    throw std::invalid_argument("pow degree guard exceeded");
  auto acc = Poly<F>::one(base.field());
  auto b = base;
  while (e) {
    if (e & 1) acc = acc * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return acc;
}

template <class F>
Poly<F> pow_mod(const Poly<F>& base, const Integer& e, const Poly<F>& mod) {
  if (e.sign() < 0) throw std::invalid_argument("negative exponent");
  auto acc = Poly<F>::one(base.field());
  auto b = base % mod;
  size_t nb = e.is_zero() ? 0 : e.bit_length();
  for (size_t i = 0; i < nb; ++i) {
    if (e.bit(i)) acc = (acc * b) % mod;
    b = (b * b) % mod;
  }
  return acc;
}

template <class F>
Poly<F> pow_mod(const Poly<F>& base, std::uint64_t e, const Poly<F>& mod) {
  auto acc = Poly<F>::one(base.field());
  auto b = base % mod;
  while (e) {
    if (e & 1) acc = (acc * b) % mod;
    e >>= 1;
    if (e) b = (b * b) % mod;
  }
  return acc;
}

// total order for canonical sorting: degree, then coefficients from the top
template <class F>
bool poly_less(const Poly<F>& a, const Poly<F>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& f = *a.field();
  for (int i = a.degree(); i >= 0; --i) {
    if (!f.eq(a.coeff(i), b.coeff(i))) return f.elem_less(a.coeff(i), b.coeff(i));
  }
  return false;
}

// canonical text form: terms from the top, coefficient 1 elided, composite
// coefficients parenthesized, e.g. "x^2 - x - 1" or "(g+1)*x^2 + g"
template <class F>
std::string poly_str(const Poly<F>& p) {
  if (p.is_zero()) return "0";
  const auto& f = *p.field();
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    auto c = p.coeff(i);
    if (f.is_zero(c)) continue;
    std::string cs = f.elem_str(c);
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    bool composite = cs.find_first_of("+-") != std::string::npos;
    std::string var = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    if (i == 0) {
      out += composite ? "(" + cs + ")" : cs;
    } else if (cs == "1") {
      out += var;
    } else {
      out += (composite ? "(" + cs + ")" : cs) + "*" + var;
    }
  }
  return out;
}

}  // namespace newred
