#pragma once

#include <span>
#include <vector>

#include "skewpoly/series.hpp"

namespace skewpoly {

class SkewMatrix;

/// An element Σ a_i T^i of K[T,φ] (or of its ramified extension), with the
/// multiplication rule T·a = φ(a)·T.
///
/// Trailing exact zeros are dropped. A leading coefficient that is zero only
/// up to its precision is kept, so precision information is never lost.
class SkewPoly {
 public:
  explicit SkewPoly(FieldPtr field);
  SkewPoly(FieldPtr field, std::vector<LaurentSeries> coeffs);

  static SkewPoly constant(const LaurentSeries& c);
  /// c·T^i.
  static SkewPoly monomial(const LaurentSeries& c, int i);
  /// T^i.
  static SkewPoly T(const FieldPtr& field, int i = 1);

  const FieldPtr& field() const { return field_; }
  /// −1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const LaurentSeries> coeffs() const { return coeffs_; }
  /// a_i, or zero outside [0, degree].
  LaurentSeries coeff(int i) const;
  const LaurentSeries& leading_coeff() const;
  bool is_exact() const;
  /// Leading coefficient exactly 1.
  bool is_monic() const;

  /// min_i v(a_i); throws PrecisionError when a coefficient that could attain
  /// the minimum is zero so far.
  Valuation valuation() const;
  /// min_i of the per-coefficient lower bounds (valuation or precision).
  Valuation valuation_bound() const;

  SkewPoly truncated(const Rational& prec) const;
  SkewPoly exact_part() const;
  /// Σ φ^i(a_j) T^j, i.e. φ^i applied coefficient-wise.
  SkewPoly phi_coeffs(int i) const;
  /// c·A.
  SkewPoly left_scaled(const LaurentSeries& c) const;
  /// A·c = Σ a_i φ^i(c) T^i.
  SkewPoly right_scaled(const LaurentSeries& c) const;

  SkewPoly operator-() const;
  friend SkewPoly operator+(const SkewPoly& p, const SkewPoly& q);
  friend SkewPoly operator-(const SkewPoly& p, const SkewPoly& q);
  /// Coefficient of T^n in PQ is Σ_{i+j=n} p_i φ^i(q_j).
  friend SkewPoly operator*(const SkewPoly& p, const SkewPoly& q);
  friend bool operator==(const SkewPoly& p, const SkewPoly& q);

 private:
  void trim();

  FieldPtr field_;
  std::vector<LaurentSeries> coeffs_;
};

struct DivRem {
  SkewPoly quotient;
  SkewPoly remainder;
  /// Both parts exact and A = QB + R holds exactly.
  bool exact = true;
  /// Lower bound on v(A − QB − R); empty when exact.
  Valuation precision;
};

/// Right Euclidean division A = Q·B + R with deg R < deg B.
///
/// Exact when A and B are exact and the leading coefficient of B is a
/// monomial; otherwise inverses are taken to `working_prec`.
/// Throws DomainError if B = 0, PrecisionError if precision runs out.
DivRem divrem_right(const SkewPoly& a, const SkewPoly& b, const Rational& working_prec = Rational(64));

/// u^{ν}·A·u^{μ}: a_i ↦ u^{ν} a_i u^{μ b^i}. The result may be ramified.
SkewPoly conjugate_by_upow(const SkewPoly& a, const Rational& mu, const Rational& nu);

/// Nonzero constant coefficient. Throws DomainError on A = 0 and
/// PrecisionError when a_0 is zero only up to its precision.
bool is_etale(const SkewPoly& a);

struct StrippedT {
  int power = 0;
  SkewPoly rest;
};

/// A = rest·T^{power} with rest étale.
StrippedT strip_T(const SkewPoly& a);

/// Left-multiplies by the inverse of the leading coefficient (taken to
/// `working_prec` when it is not a monomial).
SkewPoly monic(const SkewPoly& a, const Rational& working_prec = Rational(64));

/// Companion matrix of a monic A: the matrix of left multiplication by T on
/// K[T,φ]/K[T,φ]A in the basis 1, T, …, T^{d−1}. Subdiagonal ones, last column −a_i.
SkewMatrix companion(const SkewPoly& a);

}  // namespace skewpoly
