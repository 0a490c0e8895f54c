#pragma once

#include <optional>
#include <vector>

#include "skewpoly/base_skew.hpp"
#include "skewpoly/matrix.hpp"
#include "skewpoly/skew.hpp"

namespace skewpoly {

/// The class of a slope under μ ~ bμ and μ ~ μ + 1.
struct SlopeClass {
  int ell = 0;
  /// Lexicographically least rotation of the ℓ-digit base-b word of (b^ℓ − 1)·frac(μ'),
  /// most significant digit first, where μ' is μ with b-powers cleared from its denominator.
  std::vector<int> digits;
  /// The slope in [0, 1) whose digit word is `digits`.
  Rational representative;
  friend bool operator==(const SlopeClass& x, const SlopeClass& y) { return x.ell == y.ell && x.digits == y.digits; }
};

SlopeClass slope_class(const Rational& mu, int b);

/// μ1·b^k, k ≥ 0 minimal with the denominator prime to b.
Rational clear_b_denominator(const Rational& mu, int b);

/// Same b-length and μ1 − b^i μ2 ∈ Z or μ2 − b^i μ1 ∈ Z for some 0 ≤ i ≤ ℓ,
/// after clearing b-powers from both denominators.
bool slopes_equivalent(const Rational& mu1, const Rational& mu2, int b);

/// u^{−μ} P u^{μ}: c_j S^j ↦ c_j u^{μ(b^{jℓ} − 1)} T^{jℓ}. Not normalized to be monic.
SkewPoly lift_base(const BaseSkewPoly& p, const Rational& mu);

struct ProximityResult {
  enum class Status { similar, inapplicable };
  Status status = Status::inapplicable;
  /// M with M·C_P = C_Q·φ(M) to at least `target`; set when similar.
  std::optional<SkewMatrix> witness;
  /// Exact v(M·C_P − C_Q·φ(M)); empty when zero.
  Valuation check;
  int iterations = 0;
  std::string reason;
};

/// Proximity criterion: if P is monic étale integral, Q monic of the same degree
/// and v(P − Q) > b·v(p_0)/(b − 1), iterate M ↦ C_Q φ(M) C_P^{-1} from the identity.
/// Throws PrecisionError when `target` is not reached within max_iter steps.
ProximityResult similar_by_proximity(const SkewPoly& p, const SkewPoly& q, const Rational& target = Rational(30),
                                     int max_iter = 200);

struct CanonicalIrreducible {
  Rational mu;
  SlopeClass slope_class;
  KPoly base_invariant;
  /// Monic μ-reduction, irreducible in k[S; σ^ℓ].
  BaseSkewPoly witness;
};

/// For an irreducible étale A. A is similar to lift_base(witness, mu).
CanonicalIrreducible canonical_pair(const SkewPoly& a, std::uint64_t cap = kDefaultCap);

struct SimilarityVerdict {
  bool similar = false;
  /// Displacement index i with μ_x − b^i μ_y ∈ Z for which the twisted reductions matched.
  std::optional<int> twist;
  /// False: x = A, y = B. True: x = B, y = A.
  bool reversed = false;
};

/// Both must be irreducible. The only non-étale irreducibles are unit·T, similar to each other.
SimilarityVerdict similar(const SkewPoly& a, const SkewPoly& b, std::uint64_t cap = kDefaultCap);

}  // namespace skewpoly
