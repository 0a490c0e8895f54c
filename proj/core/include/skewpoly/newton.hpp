#pragma once

#include <string>
#include <vector>

#include "skewpoly/base_skew.hpp"
#include "skewpoly/skew.hpp"

namespace skewpoly {

struct Vertex {
  int index = 0;
  Rational valuation;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct SlopeDatum {
  Rational mu;
  int multiplicity = 0;
  /// ℓ_b(μ); 0 for integers.
  int ell = 0;
  friend bool operator==(const SlopeDatum&, const SlopeDatum&) = default;
};

/// Lower convex hull of {(b^i, v(a_i)) : a_i ≠ 0}. Only strict extreme points
/// are vertices, so slopes strictly increase.
struct NewtonPolygon {
  int b = 2;
  std::vector<Vertex> vertices;
  std::vector<SlopeDatum> slopes;

  bool is_monoclinic() const { return slopes.size() == 1; }
};

/// Throws PrecisionError if a coefficient that is zero only up to its
/// precision might lie on or below the hull.
NewtonPolygon newton_polygon(const SkewPoly& a);

/// Order of b modulo the b-free part of the denominator of μ, 0 if that part is 1.
int b_length(const Rational& mu, int b);
/// max(ℓ_b(μ), 1): the twist exponent of the ring holding μ-reductions.
int reduction_ell(const Rational& mu, int b);

struct MuReduction {
  Rational nu;
  int i0 = 0;
  /// Σ c_j S^j over k[S; σ^ℓ̂], c_j the leading coefficient of a_{i0 + jℓ̂}.
  BaseSkewPoly reduction;
};

/// ν makes u^ν A u^{−μ} of valuation zero; i0 is the leftmost index touching
/// the supporting line of slope μ. Requires integral exponents in A.
MuReduction mu_reduction(const SkewPoly& a, const Rational& mu);

/// Slopes of P·Q where Q is monic monoclinic of slope μ, degree d and
/// μ(b^d − 1) = −s. Slopes of P below b^d μ shift by s, those above are
/// divided by b^d, and one equal to b^d μ merges into μ.
std::vector<SlopeDatum> predicted_product_slopes(const std::vector<SlopeDatum>& slopes_p, const Rational& mu, int d,
                                                 std::int64_t s, int b);

/// `vertex i v` and `slope mu mult m ell l` lines.
std::string to_records(const NewtonPolygon& np);
/// Small character plot, one column per index i and one row per valuation.
std::string render_ascii(const NewtonPolygon& np, const SkewPoly& a);

}  // namespace skewpoly
