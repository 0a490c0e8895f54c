#pragma once

#include <vector>

#include "skewpoly/series.hpp"

namespace skewpoly {

/// Square matrix over K (entries are precision-tracked Laurent series).
/// Only the operations needed for base changes and companion iterations.
class SkewMatrix {
 public:
  SkewMatrix(FieldPtr field, int dim);
  static SkewMatrix identity(const FieldPtr& field, int dim);
  static SkewMatrix diagonal(const std::vector<LaurentSeries>& entries);

  const FieldPtr& field() const { return field_; }
  int dim() const { return dim_; }
  LaurentSeries& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i * dim_ + j)]; }
  const LaurentSeries& operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * dim_ + j)]; }

  /// Entry-wise φ.
  SkewMatrix phi() const;
  SkewMatrix truncated(const Rational& prec) const;
  SkewMatrix exact_part() const;
  bool is_exact() const;
  /// Minimum over entries of their valuation lower bounds; +∞ for the zero matrix.
  Valuation valuation_bound() const;

  /// Gauss-Jordan with minimal-valuation pivots; pivots are inverted to `prec`.
  /// Throws DomainError if singular, PrecisionError if undecidable at precision.
  SkewMatrix inverse(const Rational& prec) const;
  LaurentSeries determinant(const Rational& prec) const;

  friend SkewMatrix operator+(const SkewMatrix& a, const SkewMatrix& b);
  friend SkewMatrix operator-(const SkewMatrix& a, const SkewMatrix& b);
  friend SkewMatrix operator*(const SkewMatrix& a, const SkewMatrix& b);
  friend bool operator==(const SkewMatrix& a, const SkewMatrix& b);

 private:
  FieldPtr field_;
  int dim_;
  std::vector<LaurentSeries> entries_;
};

/// Matrix of φ_D in the basis given by the columns of P: P^{-1}·M·φ(P).
SkewMatrix change_basis(const SkewMatrix& m, const SkewMatrix& p, const Rational& prec = Rational(64));

}  // namespace skewpoly
