#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "skewpoly/base_skew.hpp"
#include "skewpoly/rational.hpp"
#include "skewpoly/series.hpp"
#include "skewpoly/skew.hpp"

namespace skewpoly::gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline FFElem random_element(const FieldCtx& k, Rng& rng, bool nonzero = false) {
  const auto lo = nonzero ? 1 : 0;
  return k.element(static_cast<std::uint32_t>(uniform(rng, lo, static_cast<int>(k.order()) - 1)));
}

/// Exact Laurent polynomial with exponents in [lo, hi].
inline LaurentSeries random_series(const FieldPtr& k, Rng& rng, int lo, int hi, int max_terms = 4) {
  std::vector<LaurentSeries::Term> terms;
  const int n = uniform(rng, 1, max_terms);
  for (int i = 0; i < n; ++i) terms.push_back({uniform(rng, lo, hi), random_element(*k, rng, true)});
  return LaurentSeries::from_terms(k, 1, std::move(terms));
}

inline LaurentSeries random_nonzero_series(const FieldPtr& k, Rng& rng, int lo, int hi, int max_terms = 4) {
  for (;;) {
    auto s = random_series(k, rng, lo, hi, max_terms);
    if (!s.is_zero()) return s;
  }
}

/// Exact skew polynomial of the given degree; coefficients may vanish except the leading one.
inline SkewPoly random_skew(const FieldPtr& k, Rng& rng, int degree, int lo, int hi, bool monic = false) {
  std::vector<LaurentSeries> coeffs;
  for (int i = 0; i < degree; ++i) {
    coeffs.push_back(uniform(rng, 0, 3) == 0 ? LaurentSeries(k) : random_series(k, rng, lo, hi));
  }
  coeffs.push_back(monic ? LaurentSeries::from_int(k, 1) : random_nonzero_series(k, rng, lo, hi));
  return SkewPoly(k, std::move(coeffs));
}

inline BaseSkewPoly random_base(const FieldPtr& k, int ell, Rng& rng, int degree, bool monic = true) {
  std::vector<FFElem> coeffs;
  for (int i = 0; i < degree; ++i) coeffs.push_back(random_element(*k, rng));
  coeffs.push_back(monic ? k->one() : random_element(*k, rng, true));
  return BaseSkewPoly(k, ell, std::move(coeffs));
}

/// All monic polynomials of the given degree over k[S; σ^ell].
inline std::vector<BaseSkewPoly> all_monic(const FieldPtr& k, int ell, int degree) {
  std::vector<BaseSkewPoly> out;
  std::uint64_t total = 1;
  for (int i = 0; i < degree; ++i) total *= k->order();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<FFElem> coeffs;
    auto rest = idx;
    for (int i = 0; i < degree; ++i) {
      coeffs.push_back(k->element(static_cast<std::uint32_t>(rest % k->order())));
      rest /= k->order();
    }
    coeffs.push_back(k->one());
    out.emplace_back(k, ell, std::move(coeffs));
  }
  return out;
}

/// Monic étale Q of degree d with a single slope μ = −s/(b^d − 1): v(q_0) = s and
/// every other point on or above the segment.
inline SkewPoly random_monoclinic(const FieldPtr& k, Rng& rng, int d, int s, int spread = 3) {
  const auto b = k->b();
  const Rational mu(-s, ipow(b, d) - 1);
  std::vector<LaurentSeries> coeffs;
  auto q0 = LaurentSeries::monomial(k, random_element(*k, rng, true), Rational(s));
  if (uniform(rng, 0, 1) == 1) q0 += random_series(k, rng, s + 1, s + spread);
  coeffs.push_back(q0);
  for (int i = 1; i < d; ++i) {
    if (uniform(rng, 0, 2) == 0) {
      coeffs.emplace_back(k);
      continue;
    }
    const auto floor_v = static_cast<int>(ceil(Rational(s) + mu * Rational(ipow(b, i) - 1)));
    coeffs.push_back(random_series(k, rng, floor_v, floor_v + spread));
  }
  coeffs.push_back(LaurentSeries::from_int(k, 1));
  return SkewPoly(k, std::move(coeffs));
}

inline LaurentSeries u_pow(const FieldPtr& k, std::int64_t n) { return LaurentSeries::upow(k, Rational(n)); }

}  // namespace skewpoly::gen
