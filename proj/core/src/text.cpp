#include "skewpoly/text.hpp"

#include <cctype>
#include <memory>
#include <sstream>

#include "skewpoly/error.hpp"

namespace skewpoly {

namespace {

struct Node {
  enum class Kind { number, symbol, add, sub, mul, neg, pow, big_oh };
  Kind kind;
  std::int64_t number = 0;
  char symbol = 0;
  Rational exponent;
  std::unique_ptr<Node> lhs;
  std::unique_ptr<Node> rhs;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr make(Node::Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto n = std::make_unique<Node>();
  n->kind = kind;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    auto n = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::int64_t integer() {
    skip();
    const auto start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (std::int64_t{1} << 56)) fail("integer too large");
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  Rational exponent() {
    if (accept('(')) {
      const bool negative = accept('-');
      std::int64_t num = integer();
      std::int64_t den = 1;
      if (accept('/')) den = integer();
      if (den == 0) fail("zero denominator");
      expect(')');
      return Rational(negative ? -num : num, den);
    }
    const bool negative = accept('-');
    const auto n = integer();
    return Rational(negative ? -n : n);
  }

  NodePtr expr() {
    NodePtr n;
    if (accept('-')) {
      n = make(Node::Kind::neg, term());
    } else {
      accept('+');
      n = term();
    }
    for (;;) {
      if (accept('+')) {
        n = make(Node::Kind::add, std::move(n), term());
      } else if (accept('-')) {
        n = make(Node::Kind::sub, std::move(n), term());
      } else {
        return n;
      }
    }
  }

  NodePtr term() {
    auto n = power();
    while (accept('*')) n = make(Node::Kind::mul, std::move(n), power());
    return n;
  }

  NodePtr power() {
    auto n = atom();
    if (accept('^')) {
      auto p = make(Node::Kind::pow, std::move(n));
      p->exponent = exponent();
      return p;
    }
    return n;
  }

  NodePtr atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      auto n = expr();
      expect(')');
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto n = make(Node::Kind::number);
      n->number = integer();
      return n;
    }
    if (c == 'O') {
      ++pos_;
      expect('(');
      auto n = make(Node::Kind::big_oh);
      if (accept('1')) {
        n->exponent = Rational(0);
      } else {
        if (!accept('u')) fail("expected u inside O(...)");
        n->exponent = accept('^') ? exponent() : Rational(1);
      }
      expect(')');
      return n;
    }
    if (c == 'a' || c == 'u' || c == 'T' || c == 'S') {
      ++pos_;
      auto n = make(Node::Kind::symbol);
      n->symbol = c;
      return n;
    }
    fail(c == '\0' ? "unexpected end of input" : std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Ring adaptor for SkewPoly: every value is a polynomial in T over the Laurent series.
struct SkewRing {
  FieldPtr field;
  using Value = SkewPoly;

  Value constant(const LaurentSeries& c) const { return SkewPoly::constant(c); }
  Value number(std::int64_t n) const { return constant(LaurentSeries::from_int(field, n)); }
  Value symbol(char s) const {
    if (s == 'a') return constant(LaurentSeries::constant(field, field->gen()));
    if (s == 'u') return constant(LaurentSeries::upow(field, Rational(1)));
    if (s == 'T') return SkewPoly::T(field);
    throw ParseError(std::string("symbol '") + s + "' is not allowed here");
  }
  Value upow(const Rational& r) const { return constant(LaurentSeries::upow(field, r)); }
  Value big_oh(const Rational& r) const { return constant(LaurentSeries::big_oh(field, r)); }
};

struct SeriesRing {
  FieldPtr field;
  using Value = LaurentSeries;

  Value number(std::int64_t n) const { return LaurentSeries::from_int(field, n); }
  Value symbol(char s) const {
    if (s == 'a') return LaurentSeries::constant(field, field->gen());
    if (s == 'u') return LaurentSeries::upow(field, Rational(1));
    throw ParseError(std::string("symbol '") + s + "' is not allowed here");
  }
  Value upow(const Rational& r) const { return LaurentSeries::upow(field, r); }
  Value big_oh(const Rational& r) const { return LaurentSeries::big_oh(field, r); }
};

struct BaseRing {
  FieldPtr field;
  int ell;
  using Value = BaseSkewPoly;

  Value number(std::int64_t n) const { return BaseSkewPoly::constant(field, ell, field->from_int(n)); }
  Value symbol(char s) const {
    if (s == 'a') return BaseSkewPoly::constant(field, ell, field->gen());
    if (s == 'S') return BaseSkewPoly::S(field, ell);
    throw ParseError(std::string("symbol '") + s + "' is not allowed here");
  }
  Value upow(const Rational&) const { throw ParseError("symbol 'u' is not allowed here"); }
  Value big_oh(const Rational&) const { throw ParseError("precision markers are not allowed here"); }
};

template <typename Ring>
typename Ring::Value eval(const Node& n, const Ring& ring) {
  using Kind = Node::Kind;
  switch (n.kind) {
    case Kind::number:
      return ring.number(n.number);
    case Kind::symbol:
      return ring.symbol(n.symbol);
    case Kind::add:
      return eval(*n.lhs, ring) + eval(*n.rhs, ring);
    case Kind::sub:
      return eval(*n.lhs, ring) - eval(*n.rhs, ring);
    case Kind::mul:
      return eval(*n.lhs, ring) * eval(*n.rhs, ring);
    case Kind::neg:
      return ring.number(0) - eval(*n.lhs, ring);
    case Kind::big_oh:
      return ring.big_oh(n.exponent);
    case Kind::pow: {
      if (n.lhs->kind == Kind::symbol && n.lhs->symbol == 'u') return ring.upow(n.exponent);
      if (!is_integer(n.exponent) || n.exponent < 0) {
        throw ParseError("only u takes negative or fractional exponents");
      }
      const auto base = eval(*n.lhs, ring);
      auto out = ring.number(1);
      for (std::int64_t i = 0; i < n.exponent.numerator(); ++i) out = out * base;
      return out;
    }
  }
  throw ParseError("malformed expression");
}

std::string exponent_text(const Rational& r) {
  if (is_integer(r)) return std::to_string(r.numerator());
  return "(" + to_string(r) + ")";
}

bool is_compound(const std::string& s) { return s.find_first_of("+") != std::string::npos; }

}  // namespace

FFElem parse_element(const FieldPtr& field, std::string_view text) {
  const auto s = parse_series(field, text);
  if (!s.is_exact() || s.size() > 1 || (s.size() == 1 && s.terms()[0].n != 0)) {
    throw ParseError("expected an element of k");
  }
  return s.is_zero() ? field->zero() : s.terms()[0].c;
}

LaurentSeries parse_series(const FieldPtr& field, std::string_view text) {
  return eval(*Parser(text).parse(), SeriesRing{field});
}

SkewPoly parse_skew(const FieldPtr& field, std::string_view text) {
  return eval(*Parser(text).parse(), SkewRing{field});
}

BaseSkewPoly parse_base(const FieldPtr& field, int ell, std::string_view text) {
  return eval(*Parser(text).parse(), BaseRing{field, ell});
}

std::string format(const FieldCtx& field, FFElem x) {
  if (field.is_zero(x)) return "0";
  const auto c = field.coords(x);
  std::string out;
  for (int i = field.m() - 1; i >= 0; --i) {
    const int ci = c[static_cast<std::size_t>(i)];
    if (ci == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(ci);
      continue;
    }
    if (ci != 1) out += std::to_string(ci) + "*";
    out += i == 1 ? "a" : "a^" + std::to_string(i);
  }
  return out;
}

std::string format(const LaurentSeries& x) {
  const auto& field = *x.field();
  std::string out;
  for (const auto& t : x.terms()) {
    if (!out.empty()) out += '+';
    const Rational r(t.n, x.ramification());
    auto coeff = format(field, t.c);
    if (r == Rational(0)) {
      out += coeff;
      continue;
    }
    if (coeff != "1") out += (is_compound(coeff) ? "(" + coeff + ")" : coeff) + "*";
    out += r == Rational(1) ? "u" : "u^" + exponent_text(r);
  }
  if (!x.is_exact()) {
    if (!out.empty()) out += '+';
    const auto prec = *x.precision();
    out += prec == Rational(0) ? "O(1)" : prec == Rational(1) ? "O(u)" : "O(u^" + exponent_text(prec) + ")";
  }
  return out.empty() ? "0" : out;
}

std::string format(const SkewPoly& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (int i = x.degree(); i >= 0; --i) {
    const auto& c = x.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_exact_zero()) continue;
    if (!out.empty()) out += '+';
    const auto coeff = format(c);
    if (i == 0) {
      out += coeff;
      continue;
    }
    if (coeff != "1") out += (is_compound(coeff) ? "(" + coeff + ")" : coeff) + "*";
    out += i == 1 ? "T" : "T^" + std::to_string(i);
  }
  return out;
}

std::string format(const BaseSkewPoly& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (int i = x.degree(); i >= 0; --i) {
    const auto c = x.coeff(i);
    if (x.field()->is_zero(c)) continue;
    if (!out.empty()) out += '+';
    const auto coeff = format(*x.field(), c);
    if (i == 0) {
      out += coeff;
      continue;
    }
    if (coeff != "1") out += (is_compound(coeff) ? "(" + coeff + ")" : coeff) + "*";
    out += i == 1 ? "S" : "S^" + std::to_string(i);
  }
  return out;
}

std::string format(const FieldCtx& field, const KPoly& f) {
  std::string out;
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    const auto c = f[static_cast<std::size_t>(i)];
    if (field.is_zero(c)) continue;
    if (!out.empty()) out += '+';
    const auto coeff = format(field, c);
    if (i == 0) {
      out += coeff;
      continue;
    }
    if (coeff != "1") out += (is_compound(coeff) ? "(" + coeff + ")" : coeff) + "*";
    out += i == 1 ? "Z" : "Z^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace skewpoly
