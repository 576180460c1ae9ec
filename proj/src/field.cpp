#include "newred/field.hpp"

#include <stdexcept>

#include "newred/parse.hpp"

namespace newred {

const std::shared_ptr<const QQ>& QQ::ctx() {
  static const std::shared_ptr<const QQ> inst = std::make_shared<const QQ>();
  return inst;
}

FieldCtx FieldCtx::parse(const std::string& spec, const std::string& modulus_text) {
  auto make_finite = [&](std::uint64_t p, unsigned n) {
    if (!modulus_text.empty()) {
      auto fp = GF::prime(p);
      auto m = parse_poly<GF>(modulus_text, fp);
      if (m.degree() != static_cast<int>(n))
        throw std::invalid_argument("modulus degree does not match the field");
      std::vector<std::uint64_t> coeffs(m.coeffs().begin(), m.coeffs().end());
      return FieldCtx::finite(GF::extension(p, n, coeffs));
    }
    return FieldCtx::finite(GF::extension(p, n));
  };

  if (spec.empty() || spec == "q" || spec == "Q" || spec == "rationals") {
    if (!modulus_text.empty())
      throw std::invalid_argument("modulus only makes sense for finite fields");
    return FieldCtx::rationals();
  }
  auto eq = spec.find('=');
  if (eq != std::string::npos) {
    std::string key = spec.substr(0, eq), val = spec.substr(eq + 1);
    Integer v(val);
    if (v <= Integer(1)) throw std::invalid_argument("field size must be at least 2");
    if (key == "p") {
      if (!is_probable_prime(v)) throw std::invalid_argument("p must be prime, got " + val);
      return make_finite(static_cast<std::uint64_t>(v.to_ll()), 1);
    }
    if (key == "q") {
      // q must be a prime power p^n
      long long q = v.to_ll();
      for (long long p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
          unsigned n = 0;
          long long t = q;
          while (t % p == 0) {
            t /= p;
            ++n;
          }
          if (t != 1) throw std::invalid_argument("q must be a prime power, got " + val);
          return make_finite(static_cast<std::uint64_t>(p), n);
        }
      }
      return make_finite(static_cast<std::uint64_t>(q), 1);  // q itself prime
    }
    throw std::invalid_argument("unknown field spec '" + spec + "'");
  }
  throw std::invalid_argument("unknown field spec '" + spec + "' (use q, p=<prime>, q=<power>)");
}

std::string FieldCtx::describe() const {
  if (is_rational()) return "Q";
  if (gf_->is_prime_field()) return "F_" + std::to_string(gf_->p());
  return "F_" + std::to_string(gf_->q()) + " = F_" + std::to_string(gf_->p()) + "^" +
         std::to_string(gf_->n());
}

AnyPoly parse_any(const std::string& text, const FieldCtx& ctx) {
  if (ctx.is_rational()) return parse_poly<QQ>(text, QQ::ctx());
  return parse_poly<GF>(text, ctx.gf());
}

std::string any_poly_str(const AnyPoly& p) {
  return std::visit([](const auto& q) { return poly_str(q); }, p);
}

}  // namespace newred
