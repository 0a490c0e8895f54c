#include "skewpoly/base_skew.hpp"

#include <algorithm>
#include <utility>

#include "skewpoly/error.hpp"

namespace skewpoly {

BaseSkewPoly::BaseSkewPoly(FieldPtr field, int ell) : BaseSkewPoly(std::move(field), ell, {}) {}

BaseSkewPoly::BaseSkewPoly(FieldPtr field, int ell, std::vector<FFElem> coeffs)
    : field_(std::move(field)), ell_(ell), coeffs_(std::move(coeffs)) {
  if (ell_ < 1) throw DomainError("twist exponent must be at least 1");
  trim();
}

BaseSkewPoly BaseSkewPoly::constant(FieldPtr field, int ell, FFElem c) {
  return BaseSkewPoly(std::move(field), ell, {c});
}

BaseSkewPoly BaseSkewPoly::S(FieldPtr field, int ell, int i) {
  std::vector<FFElem> coeffs(static_cast<std::size_t>(i) + 1, field->zero());
  coeffs.back() = field->one();
  return BaseSkewPoly(std::move(field), ell, std::move(coeffs));
}

void BaseSkewPoly::trim() {
  while (!coeffs_.empty() && field_->is_zero(coeffs_.back())) coeffs_.pop_back();
}

FFElem BaseSkewPoly::coeff(int j) const {
  if (j < 0 || j > degree()) return field_->zero();
  return coeffs_[static_cast<std::size_t>(j)];
}

FFElem BaseSkewPoly::leading_coeff() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool BaseSkewPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == field_->one(); }

BaseSkewPoly BaseSkewPoly::twist(int i) const {
  auto out = coeffs_;
  for (auto& c : out) c = field_->sigma_pow(c, i);
  return BaseSkewPoly(field_, ell_, std::move(out));
}

BaseSkewPoly BaseSkewPoly::monic() const {
  const auto inv = field_->inv(leading_coeff());
  auto out = coeffs_;
  for (auto& c : out) c = field_->mul(inv, c);
  return BaseSkewPoly(field_, ell_, std::move(out));
}

namespace {

void check_compatible(const BaseSkewPoly& x, const BaseSkewPoly& y) {
  if (x.field() != y.field()) throw DomainError("operands live over different field contexts");
  if (x.ell() != y.ell()) throw DomainError("operands have different twist exponents");
}

BaseSkewPoly add_impl(const BaseSkewPoly& x, const BaseSkewPoly& y, bool subtract) {
  check_compatible(x, y);
  const auto& k = *x.field();
  const int n = std::max(x.degree(), y.degree()) + 1;
  std::vector<FFElem> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = subtract ? k.sub(x.coeff(i), y.coeff(i)) : k.add(x.coeff(i), y.coeff(i));
  }
  return BaseSkewPoly(x.field(), x.ell(), std::move(out));
}

}  // namespace

BaseSkewPoly operator+(const BaseSkewPoly& x, const BaseSkewPoly& y) { return add_impl(x, y, false); }

BaseSkewPoly operator-(const BaseSkewPoly& x, const BaseSkewPoly& y) { return add_impl(x, y, true); }

BaseSkewPoly operator*(const BaseSkewPoly& x, const BaseSkewPoly& y) {
  check_compatible(x, y);
  if (x.is_zero() || y.is_zero()) return BaseSkewPoly(x.field(), x.ell());
  const auto& k = *x.field();
  std::vector<FFElem> out(static_cast<std::size_t>(x.degree() + y.degree() + 1), k.zero());
  for (int i = 0; i <= x.degree(); ++i) {
    const auto xi = x.coeff(i);
    if (k.is_zero(xi)) continue;
    for (int j = 0; j <= y.degree(); ++j) {
      auto& slot = out[static_cast<std::size_t>(i + j)];
      slot = k.add(slot, k.mul(xi, k.sigma_pow(y.coeff(j), static_cast<std::int64_t>(x.ell()) * i)));
    }
  }
  return BaseSkewPoly(x.field(), x.ell(), std::move(out));
}

bool operator==(const BaseSkewPoly& x, const BaseSkewPoly& y) {
  return x.field_ == y.field_ && x.ell_ == y.ell_ && x.coeffs_ == y.coeffs_;
}

bool lex_less(const BaseSkewPoly& x, const BaseSkewPoly& y) {
  if (x.degree() != y.degree()) return x.degree() < y.degree();
  return std::ranges::lexicographical_compare(x.coeffs(), y.coeffs());
}

BaseDivRem divrem_right(const BaseSkewPoly& a, const BaseSkewPoly& b) {
  check_compatible(a, b);
  if (b.is_zero()) throw DomainError("right division by the zero polynomial");
  const auto& k = *a.field();
  const std::int64_t ell = a.ell();
  const int db = b.degree();
  std::vector<FFElem> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<FFElem> q(static_cast<std::size_t>(std::max(a.degree() - db + 1, 0)), k.zero());
  for (int top = a.degree(); top >= db; --top) {
    const auto lead = r[static_cast<std::size_t>(top)];
    if (k.is_zero(lead)) continue;
    const int shift = top - db;
    const auto c = k.div(lead, k.sigma_pow(b.leading_coeff(), ell * shift));
    q[static_cast<std::size_t>(shift)] = c;
    for (int j = 0; j <= db; ++j) {
      auto& slot = r[static_cast<std::size_t>(shift + j)];
      slot = k.sub(slot, k.mul(c, k.sigma_pow(b.coeff(j), ell * shift)));
    }
  }
  r.resize(static_cast<std::size_t>(std::min(db, a.degree() + 1)));
  return {BaseSkewPoly(a.field(), a.ell(), std::move(q)), BaseSkewPoly(a.field(), a.ell(), std::move(r))};
}

BaseDivRem divrem_left(const BaseSkewPoly& a, const BaseSkewPoly& b) {
  check_compatible(a, b);
  if (b.is_zero()) throw DomainError("left division by the zero polynomial");
  const auto& k = *a.field();
  const std::int64_t ell = a.ell();
  const int db = b.degree();
  const auto lead_inv = k.inv(b.leading_coeff());
  std::vector<FFElem> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<FFElem> q(static_cast<std::size_t>(std::max(a.degree() - db + 1, 0)), k.zero());
  for (int top = a.degree(); top >= db; --top) {
    const auto lead = r[static_cast<std::size_t>(top)];
    if (k.is_zero(lead)) continue;
    const int shift = top - db;
    // B·(c S^shift) has leading term b_d σ^{ℓ d}(c) S^top.
    const auto c = k.sigma_pow(k.mul(lead_inv, lead), -ell * db);
    q[static_cast<std::size_t>(shift)] = c;
    for (int j = 0; j <= db; ++j) {
      auto& slot = r[static_cast<std::size_t>(shift + j)];
      slot = k.sub(slot, k.mul(b.coeff(j), k.sigma_pow(c, ell * j)));
    }
  }
  r.resize(static_cast<std::size_t>(std::min(db, a.degree() + 1)));
  return {BaseSkewPoly(a.field(), a.ell(), std::move(q)), BaseSkewPoly(a.field(), a.ell(), std::move(r))};
}

namespace {

std::uint64_t checked_count(std::uint64_t q, int n, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > cap / q) throw CapExceeded("field too large for brute force enumeration");
    total *= q;
  }
  if (total > cap) throw CapExceeded("field too large for brute force enumeration");
  return total;
}

// Monic polynomial of degree n whose lower coefficients are the base-q digits of index.
BaseSkewPoly monic_from_index(const FieldPtr& field, int ell, int n, std::uint64_t index) {
  std::vector<FFElem> coeffs(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) {
    coeffs[static_cast<std::size_t>(i)] = field->element(static_cast<std::uint32_t>(index % field->order()));
    index /= field->order();
  }
  coeffs.back() = field->one();
  return BaseSkewPoly(field, ell, std::move(coeffs));
}

template <typename Visit>
void for_each_right_divisor(const BaseSkewPoly& p, int degree, std::uint64_t cap, Visit&& visit) {
  const int d = p.degree();
  const auto& field = p.field();
  if (degree == 0) {
    visit(BaseSkewPoly::constant(field, p.ell(), field->one()));
    return;
  }
  if (degree == d) {
    visit(p.monic());
    return;
  }
  if (2 * degree <= d) {
    const auto total = checked_count(field->order(), degree, cap);
    for (std::uint64_t i = 0; i < total; ++i) {
      auto cand = monic_from_index(field, p.ell(), degree, i);
      if (divrem_right(p, cand).remainder.is_zero() && !visit(std::move(cand))) return;
    }
    return;
  }
  // P = L·D with L of degree d − degree and leading coefficient lc(P).
  const auto total = checked_count(field->order(), d - degree, cap);
  const auto lead = BaseSkewPoly::constant(field, p.ell(), p.leading_coeff());
  for (std::uint64_t i = 0; i < total; ++i) {
    const auto left = lead * monic_from_index(field, p.ell(), d - degree, i);
    auto dr = divrem_left(p, left);
    if (dr.remainder.is_zero() && !visit(std::move(dr.quotient))) return;
  }
}

}  // namespace

std::vector<BaseSkewPoly> monic_right_divisors(const BaseSkewPoly& p, int degree, std::uint64_t cap) {
  if (p.is_zero()) throw DomainError("divisors of zero are not enumerated");
  std::vector<BaseSkewPoly> out;
  if (degree < 0 || degree > p.degree()) return out;
  for_each_right_divisor(p, degree, cap, [&](BaseSkewPoly d) {
    out.push_back(std::move(d));
    return true;
  });
  std::ranges::sort(out, lex_less);
  return out;
}

bool is_irreducible(const BaseSkewPoly& p, std::uint64_t cap) {
  if (p.degree() < 1) throw DomainError("irreducibility needs degree at least 1");
  for (int j = 1; j < p.degree(); ++j) {
    bool found = false;
    for_each_right_divisor(p, j, cap, [&](const BaseSkewPoly&) {
      found = true;
      return false;
    });
    if (found) return false;
  }
  return true;
}

std::vector<BaseSkewPoly> factor(const BaseSkewPoly& p, std::uint64_t cap) {
  if (p.degree() < 1) throw DomainError("factorization needs degree at least 1");
  std::vector<BaseSkewPoly> out;
  BaseSkewPoly rest = p;
  while (rest.degree() >= 1) {
    std::optional<BaseSkewPoly> right;
    for (int j = 1; j < rest.degree() && !right; ++j) {
      auto divisors = monic_right_divisors(rest, j, cap);
      if (!divisors.empty()) right = std::move(divisors.front());
    }
    if (!right) {
      out.push_back(rest);
      break;
    }
    rest = divrem_right(rest, *right).quotient;
    out.push_back(std::move(*right));
  }
  std::ranges::reverse(out);
  return out;
}

namespace {

using KMatrix = std::vector<std::vector<FFElem>>;

KPoly kpoly_trim(KPoly f, const FieldCtx& k) {
  while (!f.empty() && k.is_zero(f.back())) f.pop_back();
  return f;
}

KPoly kpoly_sub(const KPoly& f, const KPoly& g, const FieldCtx& k) {
  KPoly out(std::max(f.size(), g.size()), k.zero());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = k.sub(out[i], g[i]);
  return kpoly_trim(std::move(out), k);
}

KPoly kpoly_scale(const KPoly& f, FFElem c, const FieldCtx& k) {
  KPoly out = f;
  for (auto& x : out) x = k.mul(c, x);
  return kpoly_trim(std::move(out), k);
}

// (Z − c)·f
KPoly kpoly_mul_linear(const KPoly& f, FFElem c, const FieldCtx& k) {
  KPoly out(f.size() + 1, k.zero());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[i + 1] = k.add(out[i + 1], f[i]);
    out[i] = k.sub(out[i], k.mul(c, f[i]));
  }
  return kpoly_trim(std::move(out), k);
}

// Characteristic polynomial via reduction to upper Hessenberg form.
KPoly char_poly(KMatrix h, const FieldCtx& k) {
  const int n = static_cast<int>(h.size());
  for (int j = 0; j + 2 < n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n && piv < 0; ++i) {
      if (!k.is_zero(h[i][j])) piv = i;
    }
    if (piv < 0) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (int r = 0; r < n; ++r) std::swap(h[r][piv], h[r][j + 1]);
    }
    const auto inv = k.inv(h[j + 1][j]);
    for (int i = j + 2; i < n; ++i) {
      if (k.is_zero(h[i][j])) continue;
      const auto f = k.mul(h[i][j], inv);
      for (int c = 0; c < n; ++c) h[i][c] = k.sub(h[i][c], k.mul(f, h[j + 1][c]));
      for (int r = 0; r < n; ++r) h[r][j + 1] = k.add(h[r][j + 1], k.mul(f, h[r][i]));
    }
  }
  std::vector<KPoly> p(static_cast<std::size_t>(n) + 1);
  p[0] = {k.one()};
  for (int m = 1; m <= n; ++m) {
    auto cur = kpoly_mul_linear(p[m - 1], h[m - 1][m - 1], k);
    FFElem prod = k.one();
    for (int i = m - 1; i >= 1; --i) {
      prod = k.mul(prod, h[i][i - 1]);
      cur = kpoly_sub(cur, kpoly_scale(p[i - 1], k.mul(h[i - 1][m - 1], prod), k), k);
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

}  // namespace

KPoly reduced_norm(const BaseSkewPoly& p) {
  if (!p.is_monic() || p.degree() < 1) throw DomainError("reduced norm needs a monic polynomial of degree at least 1");
  const auto& k = *p.field();
  const int d = p.degree();
  const int r = k.sigma_power_order(p.ell());
  KMatrix lambda(static_cast<std::size_t>(d), std::vector<FFElem>(static_cast<std::size_t>(d), k.zero()));
  for (int j = 0; j < d; ++j) {
    const auto col = divrem_right(BaseSkewPoly::S(p.field(), p.ell(), r + j), p).remainder;
    for (int i = 0; i < d; ++i) lambda[i][j] = col.coeff(i);
  }
  return char_poly(std::move(lambda), k);
}

namespace {

// Row-reduced kernel basis of an F_p matrix given by its rows.
std::vector<std::vector<int>> fp_kernel(std::vector<std::vector<int>> a, int cols, int p) {
  auto inv_mod = [p](int x) {
    int r = 1;
    for (int e = p - 2; e > 0; --e) r = r * x % p;
    return r;
  };
  std::vector<int> pivot_col;
  int row = 0;
  const int rows = static_cast<int>(a.size());
  for (int c = 0; c < cols && row < rows; ++c) {
    int piv = -1;
    for (int i = row; i < rows && piv < 0; ++i) {
      if (a[i][c] != 0) piv = i;
    }
    if (piv < 0) continue;
    std::swap(a[piv], a[row]);
    const int inv = inv_mod(a[row][c]);
    for (auto& x : a[row]) x = x * inv % p;
    for (int i = 0; i < rows; ++i) {
      if (i == row || a[i][c] == 0) continue;
      const int f = a[i][c];
      for (int j = 0; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[row][j]) % p + p) % p;
    }
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<int>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<int> v(static_cast<std::size_t>(cols), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = (p - a[r][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// True when x, S·x, …, S^{d−1}·x span R/RP over k (left scalars).
bool generates(const BaseSkewPoly& x, const BaseSkewPoly& p) {
  const auto& k = *p.field();
  const int d = p.degree();
  KMatrix rows;
  auto cur = x;
  const auto s = BaseSkewPoly::S(p.field(), p.ell());
  for (int j = 0; j < d; ++j) {
    std::vector<FFElem> row(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) row[i] = cur.coeff(i);
    rows.push_back(std::move(row));
    cur = divrem_right(s * cur, p).remainder;
  }
  for (int c = 0; c < d; ++c) {
    int piv = -1;
    for (int i = c; i < d && piv < 0; ++i) {
      if (!k.is_zero(rows[i][c])) piv = i;
    }
    if (piv < 0) return false;
    std::swap(rows[piv], rows[c]);
    const auto inv = k.inv(rows[c][c]);
    for (int i = c + 1; i < d; ++i) {
      const auto f = k.mul(rows[i][c], inv);
      for (int j = c; j < d; ++j) rows[i][j] = k.sub(rows[i][j], k.mul(f, rows[c][j]));
    }
  }
  return true;
}

}  // namespace

std::optional<BaseSkewPoly> similarity_witness(const BaseSkewPoly& p1, const BaseSkewPoly& p2, std::uint64_t cap) {
  check_compatible(p1, p2);
  if (!p1.is_monic() || !p2.is_monic()) throw DomainError("similarity test needs monic polynomials");
  if (p1.degree() != p2.degree()) return std::nullopt;
  const auto& field = p1.field();
  const auto& k = *field;
  const int d = p2.degree();
  const int m = k.m();
  const int p = k.p();
  const int dim = m * d;
  if (d == 0) return BaseSkewPoly::constant(field, p1.ell(), k.one());

  // Column t of the F_p matrix of x ↦ P1·x mod P2, x running over the F_p basis.
  std::vector<std::vector<int>> mat(static_cast<std::size_t>(dim), std::vector<int>(static_cast<std::size_t>(dim), 0));
  for (int i = 0; i < d; ++i) {
    for (int t = 0; t < m; ++t) {
      std::vector<int> unit(static_cast<std::size_t>(m), 0);
      unit[t] = 1;
      std::vector<FFElem> coeffs(static_cast<std::size_t>(d), k.zero());
      coeffs[i] = k.from_coords(unit);
      const auto image = divrem_right(p1 * BaseSkewPoly(field, p1.ell(), coeffs), p2).remainder;
      for (int i2 = 0; i2 < d; ++i2) {
        const auto c = k.coords(image.coeff(i2));
        for (int t2 = 0; t2 < m; ++t2) mat[i2 * m + t2][i * m + t] = c[t2];
      }
    }
  }
  const auto basis = fp_kernel(std::move(mat), dim, p);
  if (basis.empty()) return std::nullopt;
  const auto total = checked_count(static_cast<std::uint64_t>(p), static_cast<int>(basis.size()), cap);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::vector<int> v(static_cast<std::size_t>(dim), 0);
    auto rest = idx;
    for (const auto& b : basis) {
      const int c = static_cast<int>(rest % static_cast<std::uint64_t>(p));
      rest /= static_cast<std::uint64_t>(p);
      if (c == 0) continue;
      for (int j = 0; j < dim; ++j) v[j] = (v[j] + c * b[j]) % p;
    }
    std::vector<FFElem> coeffs(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      coeffs[i] = k.from_coords(std::span<const int>(v).subspan(static_cast<std::size_t>(i * m), static_cast<std::size_t>(m)));
    }
    BaseSkewPoly x(field, p1.ell(), std::move(coeffs));
    if (generates(x, p2)) return x;
  }
  return std::nullopt;
}

bool similar(const BaseSkewPoly& p1, const BaseSkewPoly& p2, std::uint64_t cap) {
  return similarity_witness(p1, p2, cap).has_value();
}

}  // namespace skewpoly
