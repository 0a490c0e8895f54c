#pragma once

#include <vector>

#include "skewpoly/base_skew.hpp"
#include "skewpoly/newton.hpp"
#include "skewpoly/skew.hpp"

namespace skewpoly {

struct LiftResult {
  SkewPoly F;
  /// Monic, monoclinic of slope μ, with μ-reduction P.
  SkewPoly G;
  /// Exact valuation of A − F·G (empty when the factorization is exact).
  Valuation achieved_prec;
  /// Valuations of the normalized residuals, one per iteration.
  std::vector<Rational> residual_history;
};

/// Lifts a right factor of the μ-reduction of A to a right factor of A.
/// μ must be the smallest slope of the étale polynomial A and P a monic
/// right divisor of its μ-reduction. Guarantees v(A − F·G) ≥ prec.
LiftResult hensel_lift_right_factor(const SkewPoly& a, const BaseSkewPoly& p, const Rational& mu,
                                    const Rational& prec);

/// Étale A: monoclinic with irreducible reduction. Non-étale A: unit·T.
bool is_irreducible(const SkewPoly& a, std::uint64_t cap = kDefaultCap);

struct Factorization {
  /// Ordered so that the product P_1 ⋯ P_r approximates A.
  std::vector<SkewPoly> factors;
  /// Exact valuation of A − P_1⋯P_r (empty when exact).
  Valuation residual;
};

Factorization factor(const SkewPoly& a, const Rational& prec, std::uint64_t cap = kDefaultCap);

/// Ā(T^δ)·u^{s v} with v = (p^{mδ} − 1)/(p^δ − 1), m = deg Ā.
/// Needs b = p and σ the Frobenius; Ā lives over k[S; σ^δ].
SkewPoly classical_form(const BaseSkewPoly& abar, std::int64_t s, int delta);

}  // namespace skewpoly
