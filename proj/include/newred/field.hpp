#pragma once

#include <memory>
#include <string>
#include <variant>

#include "newred/gf.hpp"
#include "newred/poly.hpp"
#include "newred/rational.hpp"

namespace newred {

// The field of rationals as a (stateless) context object, so Poly<QQ> and
// Poly<GF> share one template.
struct QQ {
  using Elem = Rational;

  static const std::shared_ptr<const QQ>& ctx();

  bool same(const QQ&) const { return true; }
  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return a.inv(); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool elem_less(const Elem& a, const Elem& b) const { return a < b; }
  Elem from_int(long long v) const { return Rational(v); }
  std::uint64_t characteristic() const { return 0; }
  std::string elem_str(const Elem& a) const { return a.str(); }
};

using QPoly = Poly<QQ>;
using FPoly = Poly<GF>;

// Runtime field descriptor: the rationals, a prime field, or an extension
// field. What the CLI and bindings parse "--field" into.
class FieldCtx {
public:
  static FieldCtx rationals() { return FieldCtx(); }
  static FieldCtx finite(GFPtr g) {
    FieldCtx c;
    c.gf_ = std::move(g);
    return c;
  }
  // "q" -> rationals; "p=7" -> prime field; "q=16" -> extension with default
  // modulus (modulus_text overrides, parsed over F_p)
  static FieldCtx parse(const std::string& spec, const std::string& modulus_text = "");

  bool is_rational() const { return gf_ == nullptr; }
  const GFPtr& gf() const { return gf_; }
  std::string describe() const;

private:
  GFPtr gf_;
};

using AnyPoly = std::variant<QPoly, FPoly>;

std::string any_poly_str(const AnyPoly& p);

}  // namespace newred
