#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "newred/field.hpp"

namespace newred {

// Polynomial expression parser. Grammar (documented in the README):
//   expr    := ['+'|'-'] term { ('+'|'-') term }
//   term    := factor { ('*'|'/') factor | factor }   (juxtaposition multiplies)
//   factor  := primary [ '^' natural ]
//   primary := natural | 'x' | 'g' | '(' expr ')'
// A '/' divisor must evaluate to a nonzero constant, so "3/4x^2" and "1/g"
// work but "1/x" does not. 'g' is the extension-field generator and is only
// valid over one.

namespace detail {

inline Rational literal_elem(const QQ&, const Integer& n) { return Rational(n); }
inline GF::Elem literal_elem(const GF& f, const Integer& n) { return f.from_integer(n); }

inline Poly<QQ> generator_poly(const std::shared_ptr<const QQ>&) {
  throw std::invalid_argument("generator symbol g is only valid over an extension field");
}
inline Poly<GF> generator_poly(const GFPtr& f) {
  if (f->n() < 2)
    throw std::invalid_argument("generator symbol g is only valid over an extension field");
  return Poly<GF>::constant(f, f->pack({0, 1}));
}

template <class F>
class PolyParser {
public:
  PolyParser(const std::string& s, std::shared_ptr<const F> f) : s_(s), f_(std::move(f)) {}

  Poly<F> run() {
    auto p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + msg);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer natural() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    return Integer(s_.substr(start, pos_ - start));
  }

  Poly<F> expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    auto acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        break;
    }
    return acc;
  }

  Poly<F> term() {
    auto acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '/') {
        ++pos_;
        auto d = factor();
        if (d.degree() > 0) fail("divisor must be a constant");
        if (d.is_zero()) fail("division by zero");
        acc = scale(acc, f_->inv(d.coeff(0)));
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'g' || c == '(') {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly<F> factor() {
    auto base = primary();
    if (eat('^')) {
      Integer e = natural();
      if (e > Integer(kMaxPolyDegree)) fail("exponent too large");
      return pow(base, static_cast<unsigned long>(e.to_ll()));
    }
    return base;
  }

  Poly<F> primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      auto p = expr();
      if (!eat(')')) fail("missing ')'");
      return p;
    }
    if (c == 'x') {
      ++pos_;
      return Poly<F>::x(f_);
    }
    if (c == 'g') {
      ++pos_;
      return generator_poly(f_);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Poly<F>::constant(f_, literal_elem(*f_, natural()));
    }
    fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  size_t pos_ = 0;
  std::shared_ptr<const F> f_;
};

}  // namespace detail

template <class F>
Poly<F> parse_poly(const std::string& text, std::shared_ptr<const F> field) {
  return detail::PolyParser<F>(text, std::move(field)).run();
}

// parse a single field element (a degree-0 expression)
template <class F>
typename F::Elem parse_elem(const std::string& text, std::shared_ptr<const F> field) {
  auto p = parse_poly<F>(text, field);
  if (p.degree() > 0) throw std::invalid_argument("expected a constant, got '" + text + "'");
  return p.coeff(0);
}

AnyPoly parse_any(const std::string& text, const FieldCtx& ctx);

}  // namespace newred
