#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "skewpoly/field.hpp"

namespace skewpoly {

inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 20;

/// Element Σ c_j S^j of k[S; σ^ℓ], where S·c = σ^ℓ(c)·S.
class BaseSkewPoly {
 public:
  BaseSkewPoly(FieldPtr field, int ell);
  BaseSkewPoly(FieldPtr field, int ell, std::vector<FFElem> coeffs);

  static BaseSkewPoly constant(FieldPtr field, int ell, FFElem c);
  /// S^i.
  static BaseSkewPoly S(FieldPtr field, int ell, int i = 1);

  const FieldPtr& field() const { return field_; }
  int ell() const { return ell_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const FFElem> coeffs() const { return coeffs_; }
  FFElem coeff(int j) const;
  FFElem leading_coeff() const;
  bool is_monic() const;

  /// σ^i applied to every coefficient (σ itself, not σ^ℓ).
  BaseSkewPoly twist(int i) const;
  /// Left-multiplies by the inverse of the leading coefficient.
  BaseSkewPoly monic() const;

  friend BaseSkewPoly operator+(const BaseSkewPoly& x, const BaseSkewPoly& y);
  friend BaseSkewPoly operator-(const BaseSkewPoly& x, const BaseSkewPoly& y);
  friend BaseSkewPoly operator*(const BaseSkewPoly& x, const BaseSkewPoly& y);
  friend bool operator==(const BaseSkewPoly& x, const BaseSkewPoly& y);

 private:
  void trim();

  FieldPtr field_;
  int ell_;
  std::vector<FFElem> coeffs_;
};

/// Degree first, then coefficient codes from the constant term upward.
bool lex_less(const BaseSkewPoly& x, const BaseSkewPoly& y);

struct BaseDivRem {
  BaseSkewPoly quotient;
  BaseSkewPoly remainder;
};

/// A = Q·B + R, deg R < deg B.
BaseDivRem divrem_right(const BaseSkewPoly& a, const BaseSkewPoly& b);
/// A = B·Q + R, deg R < deg B.
BaseDivRem divrem_left(const BaseSkewPoly& a, const BaseSkewPoly& b);

/// All monic right divisors of P of the given degree, sorted by lex_less.
/// Degrees above deg P / 2 are found through their left cofactors, so the
/// enumeration size is q^{min(deg, deg P − deg)}; above `cap` it throws CapExceeded.
std::vector<BaseSkewPoly> monic_right_divisors(const BaseSkewPoly& p, int degree, std::uint64_t cap = kDefaultCap);

/// Irreducible factors listed so that their ordered product is P.
/// Every factor except the first is monic; the first carries the leading coefficient.
std::vector<BaseSkewPoly> factor(const BaseSkewPoly& p, std::uint64_t cap = kDefaultCap);

bool is_irreducible(const BaseSkewPoly& p, std::uint64_t cap = kDefaultCap);

/// Commutative polynomial over k, coefficients low to high.
using KPoly = std::vector<FFElem>;

/// Characteristic polynomial of x ↦ S^r·x on k[S;σ^ℓ]/(P), r the order of σ^ℓ.
KPoly reduced_norm(const BaseSkewPoly& p);

/// An element x of k[S;σ^ℓ]/(P2) annihilated by P1 that generates the
/// quotient, i.e. the image of 1 under an isomorphism R/RP1 → R/RP2.
/// Empty when P1 and P2 are not similar. Both must be monic.
std::optional<BaseSkewPoly> similarity_witness(const BaseSkewPoly& p1, const BaseSkewPoly& p2,
                                               std::uint64_t cap = kDefaultCap);

bool similar(const BaseSkewPoly& p1, const BaseSkewPoly& p2, std::uint64_t cap = kDefaultCap);

}  // namespace skewpoly
