#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace skewpoly {

/// An element of k = F_{p^m}. The code packs the coordinates in the power
/// basis of the modulus as base-p digits: code = Σ c_j p^j.
struct FFElem {
  std::uint32_t code = 0;

  friend bool operator==(FFElem, FFElem) = default;
  friend auto operator<=>(FFElem, FFElem) = default;
};

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

/// The ambient data of the whole library: the residue field k = F_p[a]/(modulus),
/// the Frobenius power σ = (x ↦ x^{p^s}) and the integer b ≥ 2 with φ(u) = u^b.
///
/// Immutable after construction; arithmetic goes through precomputed
/// logarithm tables, so q = p^m is limited to 2^16.
class FieldCtx {
 public:
  /// Uses the built-in Conway modulus for (p, m).
  static FieldPtr create(int p, int m, int s, int b);
  /// `modulus` lists coefficients from the constant term up; it must be monic
  /// and irreducible over F_p.
  static FieldPtr create(int p, std::vector<int> modulus, int s, int b);

  /// Conway polynomial for p ∈ {2,3,5}, m ≤ 4 (low-to-high coefficients).
  static std::optional<std::vector<int>> builtin_modulus(int p, int m);

  int p() const { return p_; }
  int m() const { return m_; }
  int s() const { return s_; }
  int b() const { return b_; }
  std::uint32_t order() const { return q_; }
  std::span<const int> modulus() const { return modulus_; }

  /// Multiplicative order of σ on k, r = m / gcd(m, s).
  int sigma_order() const { return sigma_order_; }
  /// Order of σ^j on k.
  int sigma_power_order(int j) const;
  /// True when σ is x ↦ x^p.
  bool sigma_is_frobenius() const { return m_ == 1 || s_ == 1; }

  FFElem zero() const { return FFElem{0}; }
  FFElem one() const { return FFElem{1}; }
  /// The generator symbol `a` (class of x modulo the modulus).
  FFElem gen() const;
  /// The i-th element in code order, i < order().
  FFElem element(std::uint32_t i) const { return FFElem{i}; }

  FFElem from_int(std::int64_t n) const;
  FFElem from_coords(std::span<const int> coords) const;
  std::vector<int> coords(FFElem x) const;

  bool is_zero(FFElem x) const { return x.code == 0; }
  FFElem add(FFElem x, FFElem y) const;
  FFElem sub(FFElem x, FFElem y) const;
  FFElem neg(FFElem x) const;
  FFElem mul(FFElem x, FFElem y) const;
  /// Throws DomainError on zero.
  FFElem inv(FFElem x) const;
  FFElem div(FFElem x, FFElem y) const;
  FFElem pow(FFElem x, std::int64_t n) const;

  /// σ(x) = x^{p^s}.
  FFElem sigma(FFElem x) const { return sigma_pow(x, 1); }
  /// σ^j(x); j may be negative.
  FFElem sigma_pow(FFElem x, std::int64_t j) const;

 private:
  FieldCtx(int p, std::vector<int> modulus, int s, int b);

  std::uint32_t add_digits(std::uint32_t x, std::uint32_t y, bool subtract) const;

  int p_;
  int m_;
  int s_;
  int b_;
  std::uint32_t q_;
  int sigma_order_;
  std::vector<int> modulus_;
  std::vector<std::uint32_t> pow_p_;
  std::vector<std::uint32_t> exp_;   // exp_[i] = g^i, i < q-1
  std::vector<std::uint32_t> log_;   // log_[x] for x ≠ 0
  std::vector<std::uint16_t> add_table_;  // q×q when q ≤ 1024
  std::vector<std::uint32_t> neg_;
};

/// Commutative F_p[x] helpers used for modulus validation.
namespace fp_poly {
/// True iff `f` (low-to-high, monic) is irreducible over F_p. Exhaustive factor search.
bool is_irreducible(int p, std::span<const int> f);
}  // namespace fp_poly

}  // namespace skewpoly
