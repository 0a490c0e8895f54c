#include "skewpoly/series.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "skewpoly/error.hpp"

namespace skewpoly {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError("exponent overflow in Laurent series");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError("exponent overflow in Laurent series");
  return r;
}

// Precision arithmetic with kExact as +∞.
std::int64_t prec_add(std::int64_t a, std::int64_t b) {
  if (a == LaurentSeries::kExact || b == LaurentSeries::kExact) return LaurentSeries::kExact;
  return checked_add(a, b);
}

std::int64_t prec_scale(std::int64_t p, std::int64_t c) {
  return p == LaurentSeries::kExact ? p : checked_mul(p, c);
}

void same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a != b) throw DomainError("operands live over different field contexts");
}

}  // namespace

LaurentSeries::LaurentSeries(FieldPtr field) : field_(std::move(field)) {}

LaurentSeries::LaurentSeries(FieldPtr field, std::int64_t e, std::vector<Term> terms, std::int64_t prec)
    : field_(std::move(field)), e_(e), terms_(std::move(terms)), prec_(prec) {}

LaurentSeries LaurentSeries::constant(FieldPtr field, FFElem c) {
  std::vector<Term> t;
  if (c.code != 0) t.push_back({0, c});
  return LaurentSeries(std::move(field), 1, std::move(t), kExact);
}

LaurentSeries LaurentSeries::from_int(FieldPtr field, std::int64_t n) {
  const auto c = field->from_int(n);
  return constant(std::move(field), c);
}

LaurentSeries LaurentSeries::monomial(FieldPtr field, FFElem c, const Rational& exponent) {
  std::vector<Term> t;
  if (c.code != 0) t.push_back({exponent.numerator(), c});
  return LaurentSeries(std::move(field), exponent.denominator(), std::move(t), kExact);
}

LaurentSeries LaurentSeries::upow(FieldPtr field, const Rational& mu) {
  const auto one = field->one();
  return monomial(std::move(field), one, mu);
}

LaurentSeries LaurentSeries::big_oh(FieldPtr field, const Rational& prec) {
  return LaurentSeries(std::move(field), prec.denominator(), {}, prec.numerator());
}

LaurentSeries LaurentSeries::from_terms(FieldPtr field, std::int64_t e, std::vector<Term> terms, std::int64_t prec) {
  if (e < 1) throw DomainError("ramification index must be positive");
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.n < b.n; });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (const auto& t : terms) {
    if (t.n >= prec) break;
    if (!merged.empty() && merged.back().n == t.n) {
      merged.back().c = field->add(merged.back().c, t.c);
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.c.code == 0; });
  return LaurentSeries(std::move(field), e, std::move(merged), prec);
}

Valuation LaurentSeries::precision() const {
  if (is_exact()) return std::nullopt;
  return Rational(prec_, e_);
}

bool LaurentSeries::is_one() const {
  return is_exact() && terms_.size() == 1 && terms_[0].n == 0 && terms_[0].c == field_->one();
}

Valuation LaurentSeries::valuation() const {
  if (!terms_.empty()) return Rational(terms_.front().n, e_);
  if (is_exact()) return std::nullopt;
  throw PrecisionError("valuation undetermined at this precision (series is O(u^" + to_string(Rational(prec_, e_)) +
                       "))");
}

Valuation LaurentSeries::valuation_bound() const {
  if (!terms_.empty()) return Rational(terms_.front().n, e_);
  return precision();
}

FFElem LaurentSeries::coeff(const Rational& exponent) const {
  const auto scaled = exponent * Rational(e_);
  if (!is_integer(scaled)) return field_->zero();
  const auto n = scaled.numerator();
  if (n >= prec_) throw PrecisionError("coefficient of u^" + to_string(exponent) + " is beyond the precision");
  auto it = std::lower_bound(terms_.begin(), terms_.end(), n, [](const Term& t, std::int64_t v) { return t.n < v; });
  if (it != terms_.end() && it->n == n) return it->c;
  return field_->zero();
}

FFElem LaurentSeries::leading_coeff() const {
  if (terms_.empty()) {
    if (is_exact()) throw DomainError("zero has no leading coefficient");
    throw PrecisionError("leading coefficient undetermined at this precision");
  }
  return terms_.front().c;
}

void LaurentSeries::drop_beyond_precision() {
  if (prec_ == kExact) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), prec_, [](const Term& t, std::int64_t v) { return t.n < v; });
  terms_.erase(it, terms_.end());
}

LaurentSeries LaurentSeries::truncated(const Rational& prec) const {
  const auto e = std::lcm(e_, prec.denominator());
  auto r = rescaled(e);
  const auto p = (prec * Rational(e)).numerator();
  if (p < r.prec_) {
    r.prec_ = p;
    r.drop_beyond_precision();
  }
  return r;
}

LaurentSeries LaurentSeries::exact_part() const {
  LaurentSeries r = *this;
  r.prec_ = kExact;
  return r;
}

LaurentSeries LaurentSeries::rescaled(std::int64_t e) const {
  if (e == e_) return *this;
  if (e % e_ != 0) throw DomainError("rescaling must multiply the ramification index");
  const auto c = e / e_;
  LaurentSeries r = *this;
  r.e_ = e;
  for (auto& t : r.terms_) t.n = checked_mul(t.n, c);
  r.prec_ = prec_scale(prec_, c);
  return r;
}

LaurentSeries LaurentSeries::canonical() const {
  std::int64_t g = e_;
  for (const auto& t : terms_) g = std::gcd(g, t.n);
  if (!is_exact()) g = std::gcd(g, prec_);
  if (g <= 1) return *this;
  LaurentSeries r = *this;
  r.e_ /= g;
  for (auto& t : r.terms_) t.n /= g;
  if (!is_exact()) r.prec_ /= g;
  return r;
}

LaurentSeries LaurentSeries::scaled(FFElem c) const {
  LaurentSeries r = *this;
  if (c.code == 0) {
    r.terms_.clear();
    return r;
  }
  for (auto& t : r.terms_) t.c = field_->mul(c, t.c);
  return r;
}

LaurentSeries LaurentSeries::shifted(const Rational& shift) const {
  const auto e = std::lcm(e_, shift.denominator());
  auto r = rescaled(e);
  const auto d = (shift * Rational(e)).numerator();
  for (auto& t : r.terms_) t.n = checked_add(t.n, d);
  if (!r.is_exact()) r.prec_ = checked_add(r.prec_, d);
  return r;
}

LaurentSeries LaurentSeries::phi_pow(int i) const {
  if (i < 0) throw DomainError("phi is not invertible on K");
  if (i == 0) return *this;
  const auto scale = ipow(field_->b(), i);
  LaurentSeries r = *this;
  for (auto& t : r.terms_) {
    t.n = checked_mul(t.n, scale);
    t.c = field_->sigma_pow(t.c, i);
  }
  r.prec_ = prec_scale(prec_, scale);
  return r;
}

LaurentSeries LaurentSeries::inverse(const Rational& target) const {
  if (terms_.empty()) {
    if (is_exact()) throw DomainError("inverse of zero");
    throw PrecisionError("cannot invert a series that is zero at its precision");
  }
  const auto& F = *field_;
  if (is_monomial()) {
    return LaurentSeries(field_, e_, {{-terms_[0].n, F.inv(terms_[0].c)}}, kExact);
  }
  const auto e = std::lcm(e_, target.denominator());
  const auto x = rescaled(e);
  const auto v = x.terms_.front().n;
  const auto target_num = (target * Rational(e)).numerator();
  // y is needed modulo u^{(target - v)/e}; it cannot be better than the relative precision of x.
  auto py = checked_add(target_num, -v);
  if (!x.is_exact()) py = std::min(py, checked_add(x.prec_, checked_mul(-2, v)));
  const auto len = checked_add(py, v);
  if (len <= 0) return LaurentSeries(field_, e, {}, py);

  const auto inv0 = F.inv(x.terms_.front().c);
  std::vector<FFElem> y(static_cast<std::size_t>(len), F.zero());
  y[0] = inv0;
  for (std::int64_t i = 1; i < len; ++i) {
    FFElem acc = F.zero();
    for (std::size_t t = 1; t < x.terms_.size(); ++t) {
      const auto j = x.terms_[t].n - v;
      if (j > i) break;
      acc = F.add(acc, F.mul(x.terms_[t].c, y[static_cast<std::size_t>(i - j)]));
    }
    y[static_cast<std::size_t>(i)] = F.neg(F.mul(acc, inv0));
  }
  std::vector<Term> terms;
  for (std::int64_t i = 0; i < len; ++i) {
    if (y[static_cast<std::size_t>(i)].code != 0) terms.push_back({i - v, y[static_cast<std::size_t>(i)]});
  }
  return LaurentSeries(field_, e, std::move(terms), py);
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& t : r.terms_) t.c = field_->neg(t.c);
  return r;
}

namespace {

LaurentSeries add_impl(const LaurentSeries& x, const LaurentSeries& y, bool subtract) {
  same_field(x.field(), y.field());
  const auto& F = *x.field();
  const auto e = std::lcm(x.ramification(), y.ramification());
  const auto a = x.rescaled(e);
  const auto b = y.rescaled(e);
  const auto prec = std::min(a.precision_numerator(), b.precision_numerator());
  std::vector<LaurentSeries::Term> out;
  out.reserve(a.size() + b.size());
  const auto sa = a.terms();
  const auto sb = b.terms();
  auto ia = sa.begin();
  auto ib = sb.begin();
  while (ia != sa.end() || ib != sb.end()) {
    LaurentSeries::Term t;
    if (ib == sb.end() || (ia != sa.end() && ia->n < ib->n)) {
      t = *ia++;
    } else if (ia == sa.end() || ib->n < ia->n) {
      t = {ib->n, subtract ? F.neg(ib->c) : ib->c};
      ++ib;
    } else {
      t = {ia->n, subtract ? F.sub(ia->c, ib->c) : F.add(ia->c, ib->c)};
      ++ia;
      ++ib;
    }
    if (t.n >= prec) break;
    if (t.c.code != 0) out.push_back(t);
  }
  return LaurentSeries::from_terms(x.field(), e, std::move(out), prec);
}

}  // namespace

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& y) { return *this = add_impl(*this, y, false); }

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& y) { return *this = add_impl(*this, y, true); }

LaurentSeries& LaurentSeries::operator*=(const LaurentSeries& y) { return *this = *this * y; }

LaurentSeries operator*(const LaurentSeries& x, const LaurentSeries& y) {
  same_field(x.field(), y.field());
  const auto& F = *x.field();
  if (x.is_exact_zero() || y.is_exact_zero()) return LaurentSeries(x.field());
  const auto e = std::lcm(x.ramification(), y.ramification());
  const auto a = x.rescaled(e);
  const auto b = y.rescaled(e);
  // Lower bounds on the valuations (precision for zero-so-far operands).
  const auto va = a.is_zero() ? a.precision_numerator() : a.terms().front().n;
  const auto vb = b.is_zero() ? b.precision_numerator() : b.terms().front().n;
  const auto prec = std::min(prec_add(a.precision_numerator(), vb), prec_add(b.precision_numerator(), va));
  if (a.is_zero() || b.is_zero()) return LaurentSeries::from_terms(x.field(), e, {}, prec);

  const auto& ta = a.terms();
  const auto& tb = b.terms();
  if (tb.size() == 1 || ta.size() == 1) {
    const auto& single = tb.size() == 1 ? tb[0] : ta[0];
    const auto& many = tb.size() == 1 ? ta : tb;
    std::vector<LaurentSeries::Term> out;
    out.reserve(many.size());
    for (const auto& t : many) {
      const auto n = checked_add(t.n, single.n);
      if (n >= prec) break;
      out.push_back({n, F.mul(t.c, single.c)});
    }
    return LaurentSeries::from_terms(x.field(), e, std::move(out), prec);
  }

  const auto lo = checked_add(ta.front().n, tb.front().n);
  auto hi = checked_add(ta.back().n, tb.back().n);
  if (prec != LaurentSeries::kExact) hi = std::min(hi, prec - 1);
  if (hi < lo) return LaurentSeries::from_terms(x.field(), e, {}, prec);
  const auto width = static_cast<std::uint64_t>(hi - lo) + 1;
  const auto work = static_cast<std::uint64_t>(ta.size()) * tb.size();
  std::vector<LaurentSeries::Term> out;
  if (width <= 4 * work + 64) {
    std::vector<FFElem> acc(width, F.zero());
    for (const auto& s : ta) {
      for (const auto& t : tb) {
        const auto n = s.n + t.n;
        if (n > hi) break;
        auto& slot = acc[static_cast<std::size_t>(n - lo)];
        slot = F.add(slot, F.mul(s.c, t.c));
      }
    }
    for (std::uint64_t i = 0; i < width; ++i) {
      if (acc[i].code != 0) out.push_back({lo + static_cast<std::int64_t>(i), acc[i]});
    }
    return LaurentSeries::from_terms(x.field(), e, std::move(out), prec);
  }
  out.reserve(static_cast<std::size_t>(work));
  for (const auto& s : ta) {
    for (const auto& t : tb) {
      const auto n = checked_add(s.n, t.n);
      if (n > hi) break;
      out.push_back({n, F.mul(s.c, t.c)});
    }
  }
  return LaurentSeries::from_terms(x.field(), e, std::move(out), prec);
}

bool operator==(const LaurentSeries& x, const LaurentSeries& y) {
  if (x.field() != y.field()) return false;
  const auto e = std::lcm(x.ramification(), y.ramification());
  const auto a = x.rescaled(e);
  const auto b = y.rescaled(e);
  return a.precision_numerator() == b.precision_numerator() && std::ranges::equal(a.terms(), b.terms());
}

}  // namespace skewpoly
