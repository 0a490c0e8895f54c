#include "skewpoly/field.hpp"

#include <map>
#include <numeric>
#include <utility>

#include "skewpoly/error.hpp"

namespace skewpoly {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int mod(std::int64_t x, int p) {
  auto r = static_cast<int>(x % p);
  return r < 0 ? r + p : r;
}

// Remainder of f modulo the monic g over F_p (both low-to-high).
std::vector<int> poly_rem(int p, std::vector<int> f, std::span<const int> g) {
  const auto dg = static_cast<int>(g.size()) - 1;
  for (auto i = static_cast<int>(f.size()) - 1; i >= dg; --i) {
    const int c = f[i];
    if (c == 0) continue;
    for (int j = 0; j <= dg; ++j) f[i - dg + j] = mod(f[i - dg + j] - std::int64_t{c} * g[j], p);
  }
  f.resize(std::min<std::size_t>(f.size(), static_cast<std::size_t>(dg)));
  return f;
}

}  // namespace

namespace fp_poly {

bool is_irreducible(int p, std::span<const int> f) {
  const auto n = static_cast<int>(f.size()) - 1;
  if (n < 1) return false;
  std::vector<int> g;
  for (int d = 1; 2 * d <= n; ++d) {
    // Enumerate monic g of degree d: p^d candidates.
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      g.assign(d + 1, 0);
      g[d] = 1;
      auto t = idx;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(t % p);
        t /= p;
      }
      auto r = poly_rem(p, std::vector<int>(f.begin(), f.end()), g);
      bool zero = true;
      for (int c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace fp_poly

std::optional<std::vector<int>> FieldCtx::builtin_modulus(int p, int m) {
  static const std::map<std::pair<int, int>, std::vector<int>> table = {
      {{2, 1}, {1, 1}},       {{2, 2}, {1, 1, 1}},    {{2, 3}, {1, 1, 0, 1}},    {{2, 4}, {1, 1, 0, 0, 1}},
      {{3, 1}, {1, 1}},       {{3, 2}, {2, 2, 1}},    {{3, 3}, {1, 2, 0, 1}},    {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 1}, {3, 1}},       {{5, 2}, {2, 4, 1}},    {{5, 3}, {3, 3, 0, 1}},    {{5, 4}, {2, 1, 4, 0, 1}},
  };
  auto it = table.find({p, m});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

FieldPtr FieldCtx::create(int p, int m, int s, int b) {
  auto modulus = builtin_modulus(p, m);
  if (!modulus) {
    throw DomainError("no built-in modulus for p=" + std::to_string(p) + ", m=" + std::to_string(m) +
                      "; supply one explicitly");
  }
  return create(p, std::move(*modulus), s, b);
}

FieldPtr FieldCtx::create(int p, std::vector<int> modulus, int s, int b) {
  return FieldPtr(new FieldCtx(p, std::move(modulus), s, b));
}

FieldCtx::FieldCtx(int p, std::vector<int> modulus, int s, int b)
    : p_(p), m_(static_cast<int>(modulus.size()) - 1), s_(s), b_(b), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) throw DomainError("p = " + std::to_string(p_) + " is not prime");
  if (m_ < 1) throw DomainError("modulus must have degree at least 1");
  for (auto& c : modulus_) c = mod(c, p_);
  if (modulus_.back() != 1) throw DomainError("modulus must be monic");
  if (!fp_poly::is_irreducible(p_, modulus_)) throw DomainError("modulus is reducible over F_p");
  if (s_ < 0 || s_ >= m_) throw DomainError("sigma power s must lie in [0, m)");
  if (b_ < 2) throw DomainError("b must be at least 2");

  std::uint64_t q = 1;
  pow_p_.push_back(1);
  for (int i = 0; i < m_; ++i) {
    q *= static_cast<std::uint64_t>(p_);
    if (q > 65536) throw DomainError("field too large: p^m must not exceed 65536");
    pow_p_.push_back(static_cast<std::uint32_t>(q));
  }
  q_ = static_cast<std::uint32_t>(q);
  sigma_order_ = m_ / std::gcd(m_, s_ == 0 ? m_ : s_);
  if (s_ == 0) sigma_order_ = 1;

  neg_.resize(q_);
  for (std::uint32_t x = 0; x < q_; ++x) neg_[x] = add_digits(0, x, true);
  if (q_ <= 1024) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t x = 0; x < q_; ++x) {
      for (std::uint32_t y = 0; y < q_; ++y) {
        add_table_[static_cast<std::size_t>(x) * q_ + y] = static_cast<std::uint16_t>(add_digits(x, y, false));
      }
    }
  }

  // Schoolbook product modulo the modulus, used only to build the log tables.
  auto slow_mul = [&](std::uint32_t x, std::uint32_t y) {
    auto cx = coords(FFElem{x});
    auto cy = coords(FFElem{y});
    std::vector<int> prod(2 * m_, 0);
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < m_; ++j) prod[i + j] = mod(prod[i + j] + cx[i] * cy[j], p_);
    }
    return from_coords(poly_rem(p_, prod, modulus_)).code;
  };

  log_.assign(q_, 0);
  exp_.assign(q_ - 1, 0);
  for (std::uint32_t g = 1; g < q_; ++g) {
    std::uint32_t x = 1;
    std::uint32_t order = 0;
    do {
      exp_[order] = x;
      x = slow_mul(x, g);
      ++order;
    } while (x != 1 && order < q_ - 1);
    if (x == 1 && order == q_ - 1) break;
  }
  for (std::uint32_t i = 0; i + 1 < q_; ++i) log_[exp_[i]] = i;
}

std::uint32_t FieldCtx::add_digits(std::uint32_t x, std::uint32_t y, bool subtract) const {
  std::uint32_t r = 0;
  for (int i = 0; i < m_; ++i) {
    const int dx = static_cast<int>(x % p_);
    const int dy = static_cast<int>(y % p_);
    x /= p_;
    y /= p_;
    r += static_cast<std::uint32_t>(mod(subtract ? dx - dy : dx + dy, p_)) * pow_p_[i];
  }
  return r;
}

int FieldCtx::sigma_power_order(int j) const {
  const int shift = mod(static_cast<std::int64_t>(s_) * j, m_);
  if (shift == 0) return 1;
  return m_ / std::gcd(m_, shift);
}

FFElem FieldCtx::gen() const {
  std::vector<int> c(m_, 0);
  if (m_ == 1) {
    // k = F_p and `a` is the root of the linear modulus x + c0.
    return from_int(-modulus_[0]);
  }
  c[1] = 1;
  return from_coords(c);
}

FFElem FieldCtx::from_int(std::int64_t n) const { return FFElem{static_cast<std::uint32_t>(mod(n, p_))}; }

FFElem FieldCtx::from_coords(std::span<const int> c) const {
  if (c.size() > static_cast<std::size_t>(m_)) {
    // Reduce a longer polynomial modulo the modulus first.
    std::vector<int> f(c.begin(), c.end());
    for (auto& x : f) x = mod(x, p_);
    return from_coords(poly_rem(p_, f, modulus_));
  }
  std::uint32_t code = 0;
  for (std::size_t i = 0; i < c.size(); ++i) code += static_cast<std::uint32_t>(mod(c[i], p_)) * pow_p_[i];
  return FFElem{code};
}

std::vector<int> FieldCtx::coords(FFElem x) const {
  std::vector<int> c(m_);
  auto v = x.code;
  for (int i = 0; i < m_; ++i) {
    c[i] = static_cast<int>(v % p_);
    v /= p_;
  }
  return c;
}

FFElem FieldCtx::add(FFElem x, FFElem y) const {
  if (!add_table_.empty()) return FFElem{add_table_[static_cast<std::size_t>(x.code) * q_ + y.code]};
  return FFElem{add_digits(x.code, y.code, false)};
}

FFElem FieldCtx::neg(FFElem x) const { return FFElem{neg_[x.code]}; }

FFElem FieldCtx::sub(FFElem x, FFElem y) const { return add(x, neg(y)); }

FFElem FieldCtx::mul(FFElem x, FFElem y) const {
  if (x.code == 0 || y.code == 0) return zero();
  auto e = log_[x.code] + log_[y.code];
  if (e >= q_ - 1) e -= q_ - 1;
  return FFElem{exp_[e]};
}

FFElem FieldCtx::inv(FFElem x) const {
  if (x.code == 0) throw DomainError("division by zero in F_q");
  const auto l = log_[x.code];
  return FFElem{exp_[l == 0 ? 0 : q_ - 1 - l]};
}

FFElem FieldCtx::div(FFElem x, FFElem y) const { return mul(x, inv(y)); }

FFElem FieldCtx::pow(FFElem x, std::int64_t n) const {
  if (x.code == 0) {
    if (n < 0) throw DomainError("zero to a negative power");
    return n == 0 ? one() : zero();
  }
  const auto order = static_cast<std::int64_t>(q_ - 1);
  auto e = (static_cast<std::int64_t>(log_[x.code]) * (n % order)) % order;
  if (e < 0) e += order;
  return FFElem{exp_[static_cast<std::size_t>(e)]};
}

FFElem FieldCtx::sigma_pow(FFElem x, std::int64_t j) const {
  if (x.code == 0) return x;
  const int shift = mod(static_cast<std::int64_t>(s_) * (j % m_), m_);
  if (shift == 0) return x;
  return pow(x, pow_p_[shift]);
}

}  // namespace skewpoly
