#include "skewpoly/matrix.hpp"

#include <algorithm>
#include <utility>

#include "skewpoly/error.hpp"

namespace skewpoly {

SkewMatrix::SkewMatrix(FieldPtr field, int dim)
    : field_(std::move(field)), dim_(dim), entries_(static_cast<std::size_t>(dim * dim), LaurentSeries(field_)) {
  if (dim < 1) throw DomainError("matrix dimension must be at least 1");
}

SkewMatrix SkewMatrix::identity(const FieldPtr& field, int dim) {
  SkewMatrix out(field, dim);
  for (int i = 0; i < dim; ++i) out(i, i) = LaurentSeries::from_int(field, 1);
  return out;
}

SkewMatrix SkewMatrix::diagonal(const std::vector<LaurentSeries>& entries) {
  if (entries.empty()) throw DomainError("diagonal matrix needs at least one entry");
  SkewMatrix out(entries.front().field(), static_cast<int>(entries.size()));
  for (int i = 0; i < out.dim_; ++i) out(i, i) = entries[static_cast<std::size_t>(i)];
  return out;
}

SkewMatrix SkewMatrix::phi() const {
  SkewMatrix out = *this;
  for (auto& x : out.entries_) x = x.phi();
  return out;
}

SkewMatrix SkewMatrix::truncated(const Rational& prec) const {
  SkewMatrix out = *this;
  for (auto& x : out.entries_) x = x.truncated(prec);
  return out;
}

SkewMatrix SkewMatrix::exact_part() const {
  SkewMatrix out = *this;
  for (auto& x : out.entries_) x = x.exact_part();
  return out;
}

bool SkewMatrix::is_exact() const {
  return std::ranges::all_of(entries_, [](const LaurentSeries& x) { return x.is_exact(); });
}

Valuation SkewMatrix::valuation_bound() const {
  Valuation best;
  for (const auto& x : entries_) best = valuation_min(best, x.valuation_bound());
  return best;
}

namespace {

// Row index in [col, dim) holding the entry of least valuation in column col.
int choose_pivot(const SkewMatrix& a, int col) {
  int best = -1;
  Valuation best_v;
  bool undecided = false;
  for (int r = col; r < a.dim(); ++r) {
    const auto& x = a(r, col);
    if (x.is_zero()) {
      undecided = undecided || !x.is_exact();
      continue;
    }
    const auto v = x.valuation();
    if (best < 0 || valuation_less(v, best_v)) {
      best = r;
      best_v = v;
    }
  }
  if (best < 0) {
    if (undecided) throw PrecisionError("pivot undetermined at this precision");
    throw DomainError("matrix is singular");
  }
  return best;
}

void swap_rows(SkewMatrix& a, int r1, int r2) {
  for (int j = 0; j < a.dim(); ++j) std::swap(a(r1, j), a(r2, j));
}

}  // namespace

SkewMatrix SkewMatrix::inverse(const Rational& prec) const {
  SkewMatrix a = *this;
  SkewMatrix inv = identity(field_, dim_);
  for (int c = 0; c < dim_; ++c) {
    const int piv = choose_pivot(a, c);
    if (piv != c) {
      swap_rows(a, piv, c);
      swap_rows(inv, piv, c);
    }
    const auto scale = a(c, c).inverse(prec);
    for (int j = 0; j < dim_; ++j) {
      a(c, j) = scale * a(c, j);
      inv(c, j) = scale * inv(c, j);
    }
    for (int r = 0; r < dim_; ++r) {
      if (r == c || a(r, c).is_exact_zero()) continue;
      const auto f = a(r, c);
      for (int j = 0; j < dim_; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

LaurentSeries SkewMatrix::determinant(const Rational& prec) const {
  SkewMatrix a = *this;
  auto det = LaurentSeries::from_int(field_, 1);
  for (int c = 0; c < dim_; ++c) {
    int piv = 0;
    try {
      piv = choose_pivot(a, c);
    } catch (const DomainError&) {
      return LaurentSeries(field_);
    }
    if (piv != c) {
      swap_rows(a, piv, c);
      det = -det;
    }
    det *= a(c, c);
    const auto scale = a(c, c).inverse(prec);
    for (int r = c + 1; r < dim_; ++r) {
      if (a(r, c).is_exact_zero()) continue;
      const auto f = a(r, c) * scale;
      for (int j = c; j < dim_; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

SkewMatrix operator+(const SkewMatrix& a, const SkewMatrix& b) {
  if (a.dim_ != b.dim_) throw DomainError("matrix dimensions differ");
  SkewMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

SkewMatrix operator-(const SkewMatrix& a, const SkewMatrix& b) {
  if (a.dim_ != b.dim_) throw DomainError("matrix dimensions differ");
  SkewMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

SkewMatrix operator*(const SkewMatrix& a, const SkewMatrix& b) {
  if (a.dim_ != b.dim_) throw DomainError("matrix dimensions differ");
  SkewMatrix out(a.field_, a.dim_);
  for (int i = 0; i < a.dim_; ++i) {
    for (int k = 0; k < a.dim_; ++k) {
      const auto& x = a(i, k);
      if (x.is_exact_zero()) continue;
      for (int j = 0; j < a.dim_; ++j) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

bool operator==(const SkewMatrix& a, const SkewMatrix& b) {
  return a.field_ == b.field_ && a.dim_ == b.dim_ && a.entries_ == b.entries_;
}

SkewMatrix change_basis(const SkewMatrix& m, const SkewMatrix& p, const Rational& prec) {
  return p.inverse(prec) * m * p.phi();
}

}  // namespace skewpoly
