#include "skewpoly/similarity.hpp"

#include <algorithm>
#include <numeric>

#include "skewpoly/error.hpp"
#include "skewpoly/factor.hpp"
#include "skewpoly/newton.hpp"

namespace skewpoly {

Rational clear_b_denominator(const Rational& mu, int b) {
  auto out = mu;
  while (std::gcd(out.denominator(), std::int64_t{b}) > 1) out *= b;
  return out;
}

SlopeClass slope_class(const Rational& mu, int b) {
  const auto cleared = clear_b_denominator(mu, b);
  SlopeClass out;
  out.ell = b_length(cleared, b);
  out.representative = Rational(0);
  if (out.ell == 0) return out;
  const auto period = ipow(b, out.ell) - 1;
  const auto scaled = frac(cleared) * Rational(period);
  if (!is_integer(scaled)) throw Error("slope denominator does not divide b^ell - 1");
  auto n = scaled.numerator();
  std::vector<int> word(static_cast<std::size_t>(out.ell));
  for (int i = out.ell - 1; i >= 0; --i) {
    word[static_cast<std::size_t>(i)] = static_cast<int>(n % b);
    n /= b;
  }
  out.digits = word;
  for (int r = 1; r < out.ell; ++r) {
    std::ranges::rotate(word, word.begin() + 1);
    if (word < out.digits) out.digits = word;
  }
  std::int64_t value = 0;
  for (int d : out.digits) value = value * b + d;
  out.representative = Rational(value, period);
  return out;
}

bool slopes_equivalent(const Rational& mu1, const Rational& mu2, int b) {
  const auto x = clear_b_denominator(mu1, b);
  const auto y = clear_b_denominator(mu2, b);
  const int ell = b_length(x, b);
  if (ell != b_length(y, b)) return false;
  Rational scale(1);
  for (int i = 0; i <= ell; ++i) {
    if (is_integer(x - scale * y) || is_integer(y - scale * x)) return true;
    scale *= b;
  }
  return false;
}

SkewPoly lift_base(const BaseSkewPoly& p, const Rational& mu) {
  const auto& field = p.field();
  const int b = field->b();
  const int ell = reduction_ell(mu, b);
  if (p.ell() != ell) throw DomainError("base polynomial twist exponent does not match the slope's b-length");
  std::vector<LaurentSeries> coeffs(static_cast<std::size_t>(p.degree() * ell + 1), LaurentSeries(field));
  for (int j = 0; j <= p.degree(); ++j) {
    const auto exponent = mu * Rational(ipow(b, j * ell) - 1);
    if (!is_integer(exponent)) throw DomainError("slope gives non-integral exponents in the lift");
    coeffs[static_cast<std::size_t>(j * ell)] = LaurentSeries::monomial(field, p.coeff(j), exponent);
  }
  return SkewPoly(field, std::move(coeffs));
}

ProximityResult similar_by_proximity(const SkewPoly& p, const SkewPoly& q, const Rational& target, int max_iter) {
  ProximityResult out;
  if (p.field() != q.field()) throw DomainError("operands live over different field contexts");
  if (p.degree() < 1 || p.degree() != q.degree()) {
    out.reason = "degrees differ or are zero";
    return out;
  }
  if (!p.is_monic() || !q.is_monic()) {
    out.reason = "both polynomials must be monic";
    return out;
  }
  if (!is_etale(p)) {
    out.reason = "P is not etale";
    return out;
  }
  for (const auto& c : p.coeffs()) {
    if (!c.is_zero() && *c.valuation() < 0) {
      out.reason = "P does not have integral coefficients";
      return out;
    }
  }
  const int b = p.field()->b();
  const auto v0 = *p.coeffs()[0].valuation();
  const auto gap = (p - q).valuation();
  const auto threshold = Rational(b) * v0 / Rational(b - 1);
  if (gap && *gap <= threshold) {
    out.reason = "v(P-Q) = " + to_string(*gap) + " is not above b*v0/(b-1) = " + to_string(threshold);
    return out;
  }

  const int d = p.degree();
  const auto& field = p.field();
  const auto work = target + Rational(8);
  const auto cp = companion(p);
  const auto cq = companion(q);
  const auto cp_inv = cp.inverse(work + v0).truncated(work + v0).exact_part();
  auto m = SkewMatrix::identity(field, d);
  for (int it = 1; it <= max_iter; ++it) {
    auto next = (cq * m.phi() * cp_inv).truncated(work).exact_part();
    out.iterations = it;
    const bool settled = next == m;
    m = std::move(next);
    if (!settled) continue;
    out.check = (m * cp - cq * m.phi()).valuation_bound();
    if (valuation_at_least(out.check, target)) {
      out.status = ProximityResult::Status::similar;
      out.witness = m;
      return out;
    }
  }
  throw PrecisionError("proximity iteration did not reach the target precision");
}

CanonicalIrreducible canonical_pair(const SkewPoly& a, std::uint64_t cap) {
  if (a.degree() < 1 || !is_etale(a)) throw DomainError("canonical pair needs an étale polynomial of positive degree");
  if (!is_irreducible(a, cap)) throw DomainError("canonical pair needs an irreducible polynomial");
  const auto mu = newton_polygon(a).slopes.front().mu;
  auto witness = mu_reduction(a, mu).reduction.monic();
  auto norm = reduced_norm(witness);
  return {mu, slope_class(mu, a.field()->b()), std::move(norm), std::move(witness)};
}

SimilarityVerdict similar(const SkewPoly& a, const SkewPoly& b, std::uint64_t cap) {
  if (a.field() != b.field()) throw DomainError("operands live over different field contexts");
  if (!is_irreducible(a, cap) || !is_irreducible(b, cap)) throw DomainError("similarity test needs irreducible inputs");
  SimilarityVerdict out;
  const bool etale_a = is_etale(a);
  const bool etale_b = is_etale(b);
  if (!etale_a || !etale_b) {
    out.similar = etale_a == etale_b;
    if (out.similar) out.twist = 0;
    return out;
  }
  if (a.degree() != b.degree()) return out;
  const int base = a.field()->b();
  const auto ca = canonical_pair(a, cap);
  const auto cb = canonical_pair(b, cap);
  if (!slopes_equivalent(ca.mu, cb.mu, base)) return out;
  if (ca.witness.ell() != cb.witness.ell()) return out;
  const int ell = b_length(ca.mu, base);
  for (const bool reversed : {false, true}) {
    const auto& x = reversed ? cb : ca;
    const auto& y = reversed ? ca : cb;
    Rational scale(1);
    for (int i = 0; i <= ell; ++i, scale *= base) {
      if (!is_integer(x.mu - scale * y.mu)) continue;
      if (skewpoly::similar(x.witness, y.witness.twist(i), cap)) {
        out.similar = true;
        out.twist = i;
        out.reversed = reversed;
        return out;
      }
    }
  }
  return out;
}

}  // namespace skewpoly
