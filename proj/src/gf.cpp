#include "newred/gf.hpp"

#include <stdexcept>

#include "newred/poly.hpp"

namespace newred {

namespace {

constexpr std::uint64_t kTableLimit = 1u << 20;

// standard table of irreducible (in fact primitive) moduli for F_{2^n}, n <= 8
const std::vector<std::uint64_t>* char2_modulus(unsigned n) {
  static const std::vector<std::uint64_t> tab[8] = {
      {1, 1},                    // x + 1
      {1, 1, 1},                 // x^2 + x + 1
      {1, 1, 0, 1},              // x^3 + x + 1
      {1, 1, 0, 0, 1},           // x^4 + x + 1
      {1, 0, 1, 0, 0, 1},        // x^5 + x^2 + 1
      {1, 1, 0, 1, 1, 0, 1},     // x^6 + x^4 + x^3 + x + 1
      {1, 1, 0, 0, 0, 0, 0, 1},  // x^7 + x + 1
      {1, 0, 1, 1, 1, 0, 0, 0, 1},  // x^8 + x^4 + x^3 + x^2 + 1
  };
  if (n >= 1 && n <= 8) return &tab[n - 1];
  return nullptr;
}

std::vector<std::uint64_t> small_prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

// irreducibility of a monic modulus over F_p, checked with the prime field's
// own polynomial arithmetic
bool modulus_irreducible(const GFPtr& fp, const std::vector<std::uint64_t>& mod) {
  unsigned n = static_cast<unsigned>(mod.size()) - 1;
  Poly<GF> m(fp, std::vector<GF::Elem>(mod.begin(), mod.end()));
  auto x = Poly<GF>::x(fp);
  if (n == 1) return true;
  // s[k] = x^(p^k) mod m
  std::vector<Poly<GF>> s;
  s.push_back(x % m);
  for (unsigned k = 1; k <= n; ++k) s.push_back(pow_mod(s.back(), fp->p(), m));
  if (!(s[n] == x % m)) return false;
  for (auto l : small_prime_factors(n)) {
    auto g = gcd(s[n / l] - x, m);
    if (g.degree() != 0) return false;
  }
  return true;
}

}  // namespace

GF::GF(std::uint64_t p, unsigned n, std::vector<std::uint64_t> mod)
    : p_(p), n_(n), mod_(std::move(mod)) {
  pw_.resize(n_ + 1);
  pw_[0] = 1;
  for (unsigned i = 1; i <= n_; ++i) pw_[i] = pw_[i - 1] * p_;
  q_ = pw_[n_];
}

std::shared_ptr<const GF> GF::prime(std::uint64_t p) {
  if (p < 2 || p >= (1ull << 31) || !is_probable_prime(Integer(static_cast<long long>(p))))
    throw std::invalid_argument("field characteristic must be a prime below 2^31");
  return std::shared_ptr<const GF>(new GF(p, 1, {}));
}

std::shared_ptr<const GF> GF::extension(std::uint64_t p, unsigned n) {
  if (n == 0) throw std::invalid_argument("extension degree must be >= 1");
  if (n == 1) return prime(p);
  if (p == 2) {
    if (const auto* tab = char2_modulus(n)) return extension(p, n, *tab);
  }
  auto fp = prime(p);
  // first monic irreducible of degree n in code order of the low coefficients
  double qd = 1;
  for (unsigned i = 0; i < n; ++i) qd *= static_cast<double>(p);
  if (qd > 1e9) throw std::invalid_argument("no default modulus for a field this large");
  std::uint64_t limit = 1;
  for (unsigned i = 0; i < n; ++i) limit *= p;
  for (std::uint64_t code = 0; code < limit; ++code) {
    std::vector<std::uint64_t> mod(n + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < n; ++i) {
      mod[i] = c % p;
      c /= p;
    }
    mod[n] = 1;
    if (modulus_irreducible(fp, mod)) return extension(p, n, mod);
  }
  throw std::logic_error("no irreducible modulus found");  // unreachable
}

std::shared_ptr<const GF> GF::extension(std::uint64_t p, unsigned n,
                                        const std::vector<std::uint64_t>& modulus) {
  if (n == 0) throw std::invalid_argument("extension degree must be >= 1");
  auto fp = prime(p);  // validates p
  if (n == 1) return fp;
  if (modulus.size() != n + 1 || modulus[n] != 1)
    throw std::invalid_argument("modulus must be monic of degree n");
  for (auto c : modulus)
    if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
  if (!modulus_irreducible(fp, modulus))
    throw std::invalid_argument("modulus is reducible over F_p");
  auto g = std::shared_ptr<GF>(new GF(p, n, modulus));
  g->build_tables();
  return g;
}

void GF::build_tables() {
  if (n_ == 1 || q_ > kTableLimit) return;
  // multiplicative generator: smallest code whose order is q-1
  auto factors = small_prime_factors(q_ - 1);
  auto pow_slow = [&](Elem a, std::uint64_t e) {
    Elem acc = 1, b = a;
    while (e) {
      if (e & 1) acc = mul_generic(acc, b);
      e >>= 1;
      if (e) b = mul_generic(b, b);
    }
    return acc;
  };
  Elem gen = 0;
  for (Elem c = 2; c < q_; ++c) {
    bool ok = true;
    for (auto l : factors)
      if (pow_slow(c, (q_ - 1) / l) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      gen = c;
      break;
    }
  }
  if (gen == 0) throw std::logic_error("no multiplicative generator found");
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  Elem cur = 1;
  for (std::uint64_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = static_cast<std::uint32_t>(cur);
    log_[cur] = static_cast<std::uint32_t>(i);
    cur = mul_generic(cur, gen);
  }
  tables_ = true;
}

GF::Elem GF::from_integer(const Integer& v) const {
  return mod_floor(v, Integer(static_cast<long long>(p_))).to_ll();
}

GF::Elem GF::add(Elem a, Elem b) const {
  if (n_ == 1) {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  Elem out = 0;
  for (unsigned i = 0; i < n_; ++i) {
    Elem da = (a / pw_[i]) % p_, db = (b / pw_[i]) % p_;
    Elem s = da + db;
    if (s >= p_) s -= p_;
    out += s * pw_[i];
  }
  return out;
}

GF::Elem GF::neg(Elem a) const {
  if (n_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  Elem out = 0;
  for (unsigned i = 0; i < n_; ++i) {
    Elem d = (a / pw_[i]) % p_;
    out += (d == 0 ? 0 : p_ - d) * pw_[i];
  }
  return out;
}

GF::Elem GF::sub(Elem a, Elem b) const { return add(a, neg(b)); }

GF::Elem GF::mul_generic(Elem a, Elem b) const {
  if (n_ == 1) return (a * b) % p_;
  auto da = digits(a), db = digits(b);
  std::vector<std::uint64_t> conv(2 * n_ - 1, 0);
  for (unsigned i = 0; i < n_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < n_; ++j)
      conv[i + j] = (conv[i + j] + da[i] * db[j]) % p_;
  }
  // reduce by the monic modulus: x^n = -sum mod_[j] x^j
  for (int i = static_cast<int>(2 * n_ - 2); i >= static_cast<int>(n_); --i) {
    std::uint64_t c = conv[i];
    if (c == 0) continue;
    conv[i] = 0;
    for (unsigned j = 0; j < n_; ++j) {
      std::uint64_t m = mod_[j];
      if (m == 0) continue;
      std::uint64_t sub = (c * m) % p_;
      std::uint64_t& slot = conv[i - n_ + j];
      slot = (slot + p_ - sub) % p_;
    }
  }
  Elem out = 0;
  for (unsigned i = 0; i < n_; ++i) out += conv[i] * pw_[i];
  return out;
}

GF::Elem GF::mul(Elem a, Elem b) const {
  if (n_ == 1) return (a * b) % p_;
  if (tables_) {
    if (a == 0 || b == 0) return 0;
    std::uint64_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  return mul_generic(a, b);
}

GF::Elem GF::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero field element");
  if (n_ == 1) return pow(a, p_ - 2);
  if (tables_) {
    std::uint64_t l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
  }
  return pow(a, q_ - 2);
}

GF::Elem GF::pow(Elem a, std::uint64_t e) const {
  Elem acc = 1, b = a;
  while (e) {
    if (e & 1) acc = mul(acc, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return acc;
}

GF::Elem GF::pow(Elem a, const Integer& e) const {
  if (e.sign() < 0) throw std::invalid_argument("negative exponent");
  if (e.is_zero()) return 1;
  // reduce via the multiplicative order
  if (a == 0) return 0;
  Integer ord(static_cast<long long>(q_ - 1));
  return pow(a, static_cast<std::uint64_t>(mod_floor(e, ord).to_ll()));
}

GF::Elem GF::pth_root(Elem a) const { return pow(a, pw_[n_ - 1]); }

GF::Elem GF::sqrt_char2(Elem a) const {
  if (p_ != 2) throw std::invalid_argument("sqrt_char2 needs characteristic 2");
  return pow(a, q_ / 2);
}

std::vector<std::uint64_t> GF::digits(Elem a) const {
  std::vector<std::uint64_t> d(n_);
  for (unsigned i = 0; i < n_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

GF::Elem GF::pack(const std::vector<std::uint64_t>& d) const {
  if (d.size() > n_) throw std::invalid_argument("too many digits");
  Elem out = 0;
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] >= p_) throw std::invalid_argument("digit out of range");
    out += d[i] * pw_[i];
  }
  return out;
}

std::string GF::elem_str(Elem a) const {
  if (n_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  auto d = digits(a);
  std::string out;
  for (int i = static_cast<int>(n_) - 1; i >= 0; --i) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    std::string var = i == 0 ? "" : (i == 1 ? "g" : "g^" + std::to_string(i));
    if (i == 0)
      out += std::to_string(d[i]);
    else if (d[i] == 1)
      out += var;
    else
      out += std::to_string(d[i]) + var;
  }
  return out;
}

std::uint64_t trace_to_prime(const GF& F, GF::Elem a) {
  GF::Elem acc = 0, t = a;
  for (unsigned i = 0; i < F.n(); ++i) {
    acc = F.add(acc, t);
    t = F.frobenius(t);
  }
  if (acc >= F.p()) throw std::logic_error("trace left the prime subfield");
  return acc;
}

QuadParams fintwo_n22_witness(const GFPtr& F) {
  if (F->p() != 2) throw std::invalid_argument("witness needs characteristic 2");
  if (F->n() < 2)
    throw std::invalid_argument("no quadratic over F_2 has newly reducible second iterate");
  // first r != 0 with Tr(r) = 0, first s with Tr(s) = 1, then a = 1/r, b = s/r^2
  GF::Elem r = 0, s = 0;
  for (GF::Elem c = 1; c < F->q(); ++c)
    if (trace_to_prime(*F, c) == 0) {
      r = c;
      break;
    }
  for (GF::Elem c = 0; c < F->q(); ++c)
    if (trace_to_prime(*F, c) == 1) {
      s = c;
      break;
    }
  if (r == 0) throw std::logic_error("trace kernel exhausted");
  auto rinv = F->inv(r);
  return {rinv, F->mul(s, F->mul(rinv, rinv))};
}

QuadParams fintwo_n23_witness(const GFPtr& F) {
  if (F->p() != 2) throw std::invalid_argument("witness needs characteristic 2");
  // first r != 0 with Tr(r) = 1, then a = b = 1/r
  for (GF::Elem c = 1; c < F->q(); ++c)
    if (trace_to_prime(*F, c) == 1) {
      auto rinv = F->inv(c);
      return {rinv, rinv};
    }
  throw std::logic_error("trace never 1");  // unreachable: trace is onto
}

}  // namespace newred
