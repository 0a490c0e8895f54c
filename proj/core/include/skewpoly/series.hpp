#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "skewpoly/field.hpp"
#include "skewpoly/rational.hpp"

namespace skewpoly {

/// An element of k((u^{1/e})) known modulo u^{prec/e}, or exactly.
///
/// Terms are stored sparsely as (n, c) pairs meaning c·u^{n/e}, sorted by n,
/// with no zero coefficient and every n < prec. A series without terms and
/// with finite precision is "zero so far": its valuation is undetermined and
/// asking for it throws PrecisionError.
///
/// The ramification index e is not kept minimal; equality compares values.
class LaurentSeries {
 public:
  struct Term {
    std::int64_t n;
    FFElem c;
    friend bool operator==(const Term&, const Term&) = default;
  };

  static constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max();

  /// Exact zero.
  explicit LaurentSeries(FieldPtr field);

  static LaurentSeries constant(FieldPtr field, FFElem c);
  static LaurentSeries from_int(FieldPtr field, std::int64_t n);
  /// c·u^{exponent}, exact, with e = denominator(exponent).
  static LaurentSeries monomial(FieldPtr field, FFElem c, const Rational& exponent);
  /// u^{mu}.
  static LaurentSeries upow(FieldPtr field, const Rational& mu);
  /// O(u^{prec}).
  static LaurentSeries big_oh(FieldPtr field, const Rational& prec);
  /// Builds from raw terms (any order, duplicates summed); `prec` is a numerator
  /// over `e`, kExact for an exact series.
  static LaurentSeries from_terms(FieldPtr field, std::int64_t e, std::vector<Term> terms,
                                  std::int64_t prec = kExact);

  const FieldPtr& field() const { return field_; }
  std::int64_t ramification() const { return e_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_exact() const { return prec_ == kExact; }
  /// Absolute precision, empty when exact.
  Valuation precision() const;
  /// Numerator of the precision over ramification(); kExact when exact.
  std::int64_t precision_numerator() const { return prec_; }

  /// No stored terms (exact zero or zero so far).
  bool is_zero() const { return terms_.empty(); }
  bool is_exact_zero() const { return terms_.empty() && is_exact(); }
  bool is_one() const;
  /// Exact with a single term.
  bool is_monomial() const { return is_exact() && terms_.size() == 1; }

  /// Valuation; +∞ for exact zero. Throws PrecisionError on a zero-so-far series.
  Valuation valuation() const;
  /// Valuation if determined, otherwise the precision (a lower bound).
  Valuation valuation_bound() const;
  /// Coefficient of u^{exponent}. Throws PrecisionError if exponent ≥ precision.
  FFElem coeff(const Rational& exponent) const;
  /// Coefficient at the valuation. Throws PrecisionError if zero so far, DomainError if zero.
  FFElem leading_coeff() const;

  LaurentSeries truncated(const Rational& prec) const;
  /// Drops the precision marker: the stored Laurent polynomial as an exact value.
  LaurentSeries exact_part() const;
  /// Same value over ramification index e (a multiple of the current one).
  LaurentSeries rescaled(std::int64_t e) const;
  /// Same value over the smallest possible ramification index.
  LaurentSeries canonical() const;

  /// c·x for a constant c.
  LaurentSeries scaled(FFElem c) const;
  /// x·u^{r}.
  LaurentSeries shifted(const Rational& r) const;

  /// φ(Σ c_n u^{n/e}) = Σ σ(c_n) u^{bn/e}; precision is multiplied by b.
  LaurentSeries phi() const { return phi_pow(1); }
  /// φ^i for i ≥ 0.
  LaurentSeries phi_pow(int i) const;

  /// y with v(x·y − 1) ≥ target; exact when x is a monomial.
  /// Throws PrecisionError if x is zero so far, DomainError if x is exactly zero.
  LaurentSeries inverse(const Rational& target) const;

  LaurentSeries operator-() const;
  LaurentSeries& operator+=(const LaurentSeries& y);
  LaurentSeries& operator-=(const LaurentSeries& y);
  LaurentSeries& operator*=(const LaurentSeries& y);
  friend LaurentSeries operator+(LaurentSeries x, const LaurentSeries& y) { return x += y; }
  friend LaurentSeries operator-(LaurentSeries x, const LaurentSeries& y) { return x -= y; }
  friend LaurentSeries operator*(const LaurentSeries& x, const LaurentSeries& y);

  /// Value equality: same terms and same precision after a common rescaling.
  friend bool operator==(const LaurentSeries& x, const LaurentSeries& y);

 private:
  LaurentSeries(FieldPtr field, std::int64_t e, std::vector<Term> terms, std::int64_t prec);

  void drop_beyond_precision();

  FieldPtr field_;
  std::int64_t e_ = 1;
  std::vector<Term> terms_;
  std::int64_t prec_ = kExact;
};

}  // namespace skewpoly
