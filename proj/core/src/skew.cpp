#include "skewpoly/skew.hpp"

#include <algorithm>
#include <utility>

#include "skewpoly/error.hpp"
#include "skewpoly/matrix.hpp"

namespace skewpoly {

SkewPoly::SkewPoly(FieldPtr field) : field_(std::move(field)) {}

SkewPoly::SkewPoly(FieldPtr field, std::vector<LaurentSeries> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.field() != field_) throw DomainError("coefficient over a different field context");
  }
  trim();
}

SkewPoly SkewPoly::constant(const LaurentSeries& c) { return SkewPoly(c.field(), {c}); }

SkewPoly SkewPoly::monomial(const LaurentSeries& c, int i) {
  if (i < 0) throw DomainError("negative power of T");
  std::vector<LaurentSeries> coeffs(static_cast<std::size_t>(i) + 1, LaurentSeries(c.field()));
  coeffs.back() = c;
  return SkewPoly(c.field(), std::move(coeffs));
}

SkewPoly SkewPoly::T(const FieldPtr& field, int i) { return monomial(LaurentSeries::from_int(field, 1), i); }

void SkewPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_exact_zero()) coeffs_.pop_back();
}

LaurentSeries SkewPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return LaurentSeries(field_);
  return coeffs_[static_cast<std::size_t>(i)];
}

const LaurentSeries& SkewPoly::leading_coeff() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool SkewPoly::is_exact() const {
  return std::ranges::all_of(coeffs_, [](const LaurentSeries& c) { return c.is_exact(); });
}

bool SkewPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

Valuation SkewPoly::valuation() const {
  Valuation best;
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) best = valuation_min(best, c.valuation());
  }
  for (const auto& c : coeffs_) {
    if (c.is_zero() && !c.is_exact() && !valuation_less(best, c.precision())) {
      throw PrecisionError("valuation of skew polynomial undetermined at this precision");
    }
  }
  return best;
}

Valuation SkewPoly::valuation_bound() const {
  Valuation best;
  for (const auto& c : coeffs_) best = valuation_min(best, c.valuation_bound());
  return best;
}

SkewPoly SkewPoly::truncated(const Rational& prec) const {
  std::vector<LaurentSeries> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.truncated(prec));
  return SkewPoly(field_, std::move(out));
}

SkewPoly SkewPoly::exact_part() const {
  std::vector<LaurentSeries> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.exact_part());
  return SkewPoly(field_, std::move(out));
}

SkewPoly SkewPoly::phi_coeffs(int i) const {
  std::vector<LaurentSeries> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.phi_pow(i));
  return SkewPoly(field_, std::move(out));
}

SkewPoly SkewPoly::left_scaled(const LaurentSeries& c) const {
  std::vector<LaurentSeries> out;
  out.reserve(coeffs_.size());
  for (const auto& a : coeffs_) out.push_back(c * a);
  return SkewPoly(field_, std::move(out));
}

SkewPoly SkewPoly::right_scaled(const LaurentSeries& c) const {
  std::vector<LaurentSeries> out;
  out.reserve(coeffs_.size());
  LaurentSeries twisted = c;
  for (const auto& a : coeffs_) {
    out.push_back(a * twisted);
    twisted = twisted.phi();
  }
  return SkewPoly(field_, std::move(out));
}

SkewPoly SkewPoly::operator-() const {
  std::vector<LaurentSeries> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(-c);
  return SkewPoly(field_, std::move(out));
}

namespace {

SkewPoly add_impl(const SkewPoly& p, const SkewPoly& q, bool subtract) {
  if (p.field() != q.field()) throw DomainError("operands live over different field contexts");
  const auto n = std::max(p.degree(), q.degree()) + 1;
  std::vector<LaurentSeries> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (i > q.degree()) {
      out.push_back(p.coeffs()[static_cast<std::size_t>(i)]);
    } else if (i > p.degree()) {
      const auto& c = q.coeffs()[static_cast<std::size_t>(i)];
      out.push_back(subtract ? -c : c);
    } else {
      const auto& a = p.coeffs()[static_cast<std::size_t>(i)];
      const auto& b = q.coeffs()[static_cast<std::size_t>(i)];
      out.push_back(subtract ? a - b : a + b);
    }
  }
  return SkewPoly(p.field(), std::move(out));
}

}  // namespace

SkewPoly operator+(const SkewPoly& p, const SkewPoly& q) { return add_impl(p, q, false); }

SkewPoly operator-(const SkewPoly& p, const SkewPoly& q) { return add_impl(p, q, true); }

SkewPoly operator*(const SkewPoly& p, const SkewPoly& q) {
  if (p.field() != q.field()) throw DomainError("operands live over different field contexts");
  if (p.is_zero() || q.is_zero()) return SkewPoly(p.field());
  std::vector<LaurentSeries> out(static_cast<std::size_t>(p.degree() + q.degree() + 1), LaurentSeries(p.field()));
  std::vector<LaurentSeries> twisted(q.coeffs().begin(), q.coeffs().end());  // φ^i(q_j)
  for (int i = 0; i <= p.degree(); ++i) {
    if (i > 0) {
      for (auto& c : twisted) c = c.phi();
    }
    const auto& pi = p.coeffs()[static_cast<std::size_t>(i)];
    if (pi.is_exact_zero()) continue;
    for (int j = 0; j <= q.degree(); ++j) {
      out[static_cast<std::size_t>(i + j)] += pi * twisted[static_cast<std::size_t>(j)];
    }
  }
  return SkewPoly(p.field(), std::move(out));
}

bool operator==(const SkewPoly& p, const SkewPoly& q) {
  if (p.field() != q.field() || p.degree() != q.degree()) return false;
  return std::ranges::equal(p.coeffs(), q.coeffs());
}

DivRem divrem_right(const SkewPoly& a, const SkewPoly& b, const Rational& working_prec) {
  if (b.is_zero()) throw DomainError("right division by the zero polynomial");
  if (a.field() != b.field()) throw DomainError("operands live over different field contexts");
  const auto& field = a.field();
  const int db = b.degree();
  DivRem out{SkewPoly(field), SkewPoly(field), true, std::nullopt};
  if (a.degree() < db) {
    out.remainder = a;
    out.exact = a.is_exact();
    if (!out.exact) out.precision = a.valuation_bound();
    return out;
  }

  std::vector<LaurentSeries> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<LaurentSeries> q(static_cast<std::size_t>(a.degree() - db + 1), LaurentSeries(field));
  const auto& lead_b = b.leading_coeff();
  Valuation dropped;  // precision of coefficients discarded as "zero so far"

  auto top = static_cast<int>(r.size()) - 1;
  while (top >= db) {
    auto& lead = r[static_cast<std::size_t>(top)];
    if (lead.is_zero()) {
      if (!lead.is_exact()) dropped = valuation_min(dropped, lead.precision());
      --top;
      continue;
    }
    const int k = top - db;
    const auto twisted_lead = lead_b.phi_pow(k);
    LaurentSeries factor(field);
    if (twisted_lead.is_monomial()) {
      factor = lead * twisted_lead.inverse(Rational(0));
    } else {
      const auto want = lead.is_exact() ? working_prec : *lead.precision();
      const auto inv = twisted_lead.inverse(want - *lead.valuation());
      factor = lead * inv;
    }
    q[static_cast<std::size_t>(k)] += factor;
    for (int j = 0; j <= db; ++j) {
      auto& slot = r[static_cast<std::size_t>(k + j)];
      slot -= factor * b.coeffs()[static_cast<std::size_t>(j)].phi_pow(k);
    }
    auto& rest = r[static_cast<std::size_t>(top)];
    if (!rest.is_zero()) throw PrecisionError("precision exhausted in right division");
    if (!rest.is_exact()) dropped = valuation_min(dropped, rest.precision());
    --top;
  }
  r.erase(r.begin() + db, r.end());
  out.quotient = SkewPoly(field, std::move(q));
  out.remainder = SkewPoly(field, std::move(r));
  out.exact = !dropped && out.quotient.is_exact() && out.remainder.is_exact();
  if (!out.exact) {
    out.precision = dropped;
    for (const auto* part : {&out.quotient, &out.remainder}) {
      for (const auto& c : part->coeffs()) out.precision = valuation_min(out.precision, c.precision());
    }
  }
  return out;
}

SkewPoly conjugate_by_upow(const SkewPoly& a, const Rational& mu, const Rational& nu) {
  std::vector<LaurentSeries> out;
  out.reserve(a.coeffs().size());
  Rational twist = mu;  // μ·b^i
  for (const auto& c : a.coeffs()) {
    out.push_back(c.shifted(nu + twist));
    twist *= a.field()->b();
  }
  return SkewPoly(a.field(), std::move(out));
}

bool is_etale(const SkewPoly& a) {
  if (a.is_zero()) throw DomainError("the zero polynomial is not étale");
  const auto& a0 = a.coeffs()[0];
  if (!a0.is_zero()) return true;
  if (a0.is_exact()) return false;
  throw PrecisionError("constant coefficient is zero only up to its precision");
}

StrippedT strip_T(const SkewPoly& a) {
  if (a.is_zero()) throw DomainError("cannot strip powers of T from zero");
  int j = 0;
  while (a.coeffs()[static_cast<std::size_t>(j)].is_zero()) {
    if (!a.coeffs()[static_cast<std::size_t>(j)].is_exact()) {
      throw PrecisionError("coefficient is zero only up to its precision");
    }
    ++j;
  }
  std::vector<LaurentSeries> rest(a.coeffs().begin() + j, a.coeffs().end());
  return {j, SkewPoly(a.field(), std::move(rest))};
}

SkewPoly monic(const SkewPoly& a, const Rational& working_prec) {
  const auto& lead = a.leading_coeff();
  if (lead.is_one()) return a;
  const auto v = *lead.valuation();
  auto normalized = a.left_scaled(lead.inverse(working_prec - v));
  // The leading coefficient is 1 by construction; store it exactly.
  std::vector<LaurentSeries> coeffs(normalized.coeffs().begin(), normalized.coeffs().end());
  coeffs.resize(static_cast<std::size_t>(a.degree()) + 1, LaurentSeries(a.field()));
  coeffs.back() = LaurentSeries::from_int(a.field(), 1);
  return SkewPoly(a.field(), std::move(coeffs));
}

SkewMatrix companion(const SkewPoly& a) {
  if (!a.is_monic()) throw DomainError("companion matrix needs a monic polynomial");
  const int d = a.degree();
  if (d < 1) throw DomainError("companion matrix needs degree at least 1");
  SkewMatrix c(a.field(), d);
  for (int i = 1; i < d; ++i) c(i, i - 1) = LaurentSeries::from_int(a.field(), 1);
  for (int i = 0; i < d; ++i) c(i, d - 1) = -a.coeffs()[static_cast<std::size_t>(i)];
  return c;
}

}  // namespace skewpoly
