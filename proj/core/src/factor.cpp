#include "skewpoly/factor.hpp"

#include <algorithm>
#include <optional>

#include "skewpoly/error.hpp"

namespace skewpoly {

namespace {

// Σ c_j T^{jℓ} as an element of k[T, σ].
BaseSkewPoly expand(const BaseSkewPoly& p) {
  if (p.ell() == 1 || p.is_zero()) return BaseSkewPoly(p.field(), 1, {p.coeffs().begin(), p.coeffs().end()});
  std::vector<FFElem> out(static_cast<std::size_t>(p.degree() * p.ell() + 1), p.field()->zero());
  for (int j = 0; j <= p.degree(); ++j) out[static_cast<std::size_t>(j * p.ell())] = p.coeff(j);
  return BaseSkewPoly(p.field(), 1, std::move(out));
}

// u^w · Σ c_i T^i for c_i ∈ k.
SkewPoly embed(const BaseSkewPoly& p, const Rational& w) {
  std::vector<LaurentSeries> coeffs;
  coeffs.reserve(static_cast<std::size_t>(p.degree() + 1));
  for (const auto& c : p.coeffs()) coeffs.push_back(LaurentSeries::monomial(p.field(), c, w));
  return SkewPoly(p.field(), std::move(coeffs));
}

// Drops terms of coefficient i at or above levels[i] and forgets the precision marker.
SkewPoly truncate_levels(const SkewPoly& a, const std::vector<Rational>& levels) {
  std::vector<LaurentSeries> out;
  out.reserve(a.coeffs().size());
  for (int i = 0; i <= a.degree(); ++i) {
    const auto& level = levels[std::min(static_cast<std::size_t>(i), levels.size() - 1)];
    out.push_back(a.coeffs()[static_cast<std::size_t>(i)].truncated(level).exact_part());
  }
  return SkewPoly(a.field(), std::move(out));
}

SkewPoly canonical_coeffs(const SkewPoly& a) {
  std::vector<LaurentSeries> out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) {
    auto r = c.canonical();
    if (r.ramification() != 1) throw Error("lifted factor is unexpectedly ramified");
    out.push_back(std::move(r));
  }
  return SkewPoly(a.field(), std::move(out));
}

Valuation input_precision(const SkewPoly& a) {
  Valuation out;
  for (const auto& c : a.coeffs()) out = valuation_min(out, c.precision());
  return out;
}

}  // namespace

LiftResult hensel_lift_right_factor(const SkewPoly& a, const BaseSkewPoly& p, const Rational& mu,
                                    const Rational& prec) {
  if (a.degree() < 1 || !is_etale(a)) throw DomainError("lifting needs an étale polynomial of positive degree");
  const auto& field = a.field();
  const int b = field->b();
  const auto np = newton_polygon(a);
  if (np.slopes.front().mu != mu) throw DomainError("lifting requires the smallest slope of A");
  const int ell = reduction_ell(mu, b);
  if (p.ell() != ell) throw DomainError("base factor lives over the wrong twist exponent");
  if (!p.is_monic() || p.degree() < 1) throw DomainError("base factor must be monic of positive degree");

  const auto red = mu_reduction(a, mu);
  const auto base_div = divrem_right(red.reduction, p);
  if (!base_div.remainder.is_zero()) throw DomainError("base factor does not right-divide the mu-reduction");

  const auto g0 = expand(p);
  const auto a0 = base_div.quotient.coeff(0);
  const auto a0_inv = field->inv(a0);
  const auto nu = red.nu;
  const std::int64_t e = mu.denominator();
  const int deg_a = a.degree();
  const int deg_g = g0.degree();

  // Coefficient i of the normalized residual must reach prec + ν − μ b^i.
  std::vector<Rational> levels;
  Rational top(0);
  for (int i = 0; i <= deg_a; ++i) {
    const auto need = prec + nu - mu * Rational(ipow(b, i));
    levels.push_back(std::max(need, Rational(1, e)));
    top = std::max(top, levels.back());
  }
  const auto iteration_cap = static_cast<std::int64_t>(ceil(top * Rational(e))) + deg_a + 8;

  const auto a_hat = truncate_levels(conjugate_by_upow(a.exact_part(), -mu, nu), levels);
  auto f_hat = embed(expand(base_div.quotient), Rational(0));
  auto g_hat = embed(g0, Rational(0));
  auto residual = truncate_levels(a_hat - f_hat * g_hat, levels);

  LiftResult out{SkewPoly(field), SkewPoly(field), std::nullopt, {}};
  for (std::int64_t iter = 0;; ++iter) {
    Valuation v;
    for (const auto& c : residual.coeffs()) {
      if (!c.is_zero()) v = valuation_min(v, c.valuation());
    }
    if (!v) break;
    if (iter >= iteration_cap) throw PrecisionError("lifting did not converge within the iteration cap");
    if (*v <= 0) throw Error("lifting residual lost positive valuation");
    out.residual_history.push_back(*v);

    std::vector<FFElem> rbar;
    for (const auto& c : residual.coeffs()) rbar.push_back(c.coeff(*v));
    const auto split = divrem_right(BaseSkewPoly(field, 1, std::move(rbar)), g0);
    std::vector<FFElem> n_coeffs(split.remainder.coeffs().begin(), split.remainder.coeffs().end());
    for (auto& c : n_coeffs) c = field->mul(a0_inv, c);

    const auto df = embed(split.quotient, *v);
    const auto dg = embed(BaseSkewPoly(field, 1, std::move(n_coeffs)), *v);
    residual = truncate_levels(residual - df * g_hat - f_hat * dg - df * dg, levels);
    f_hat = f_hat + df;
    g_hat = g_hat + dg;
  }

  const auto rho = mu * Rational(ipow(b, deg_g));
  out.G = canonical_coeffs(conjugate_by_upow(g_hat, mu, -rho));
  out.F = canonical_coeffs(conjugate_by_upow(f_hat, rho, -nu));
  out.achieved_prec = valuation_min((a.exact_part() - out.F * out.G).valuation(), input_precision(a));
  return out;
}

bool is_irreducible(const SkewPoly& a, std::uint64_t cap) {
  if (a.degree() < 1) throw DomainError("irreducibility needs degree at least 1");
  const auto stripped = strip_T(a);
  if (stripped.power > 0) return a.degree() == 1;
  const auto np = newton_polygon(a);
  if (!np.is_monoclinic()) return false;
  return is_irreducible(mu_reduction(a, np.slopes.front().mu).reduction, cap);
}

namespace {

void factor_etale(const SkewPoly& a, const Rational& prec, std::uint64_t cap, std::vector<SkewPoly>& out) {
  if (a.degree() <= 1 || is_irreducible(a, cap)) {
    out.push_back(a);
    return;
  }
  const auto np = newton_polygon(a);
  const auto mu = np.slopes.front().mu;
  const auto reduction = mu_reduction(a, mu).reduction;
  // Smallest degree first; a proper divisor when A is monoclinic.
  const int top = np.is_monoclinic() ? reduction.degree() - 1 : reduction.degree();
  std::optional<BaseSkewPoly> right;
  for (int j = 1; j <= top && !right; ++j) {
    auto divisors = monic_right_divisors(reduction, j, cap);
    if (!divisors.empty()) right = std::move(divisors.front());
  }
  if (!right) throw Error("no right divisor found for a reducible reduction");
  auto lift = hensel_lift_right_factor(a, *right, mu, prec);
  factor_etale(lift.F, prec, cap, out);
  out.push_back(std::move(lift.G));
}

}  // namespace

Factorization factor(const SkewPoly& a, const Rational& prec, std::uint64_t cap) {
  if (a.degree() < 1) throw DomainError("factorization needs degree at least 1");
  const auto& field = a.field();
  const auto stripped = strip_T(a);
  const auto limit = input_precision(a);
  const auto target = valuation_less(limit, prec) ? *limit : prec;

  Factorization best;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const auto margin = Rational(8 << attempt);
    Factorization result;
    if (stripped.rest.degree() == 0) {
      // Fold the unit into the first T.
      result.factors.push_back(SkewPoly::monomial(stripped.rest.coeffs()[0], 1));
      for (int j = 1; j < stripped.power; ++j) result.factors.push_back(SkewPoly::T(field));
    } else {
      factor_etale(stripped.rest, prec + margin, cap, result.factors);
      for (int j = 0; j < stripped.power; ++j) result.factors.push_back(SkewPoly::T(field));
    }
    auto product = SkewPoly::constant(LaurentSeries::from_int(field, 1));
    for (const auto& f : result.factors) product = product * f;
    result.residual = valuation_min((a.exact_part() - product).valuation(), limit);
    if (valuation_at_least(result.residual, target)) return result;
    best = std::move(result);
  }
  throw PrecisionError("factorization did not reach the requested precision; best residual valuation " +
                       to_string(best.residual));
}

SkewPoly classical_form(const BaseSkewPoly& abar, std::int64_t s, int delta) {
  const auto& field = abar.field();
  if (field->b() != field->p() || !field->sigma_is_frobenius()) {
    throw DomainError("classical form needs b = p and sigma the Frobenius");
  }
  if (delta < 1 || abar.ell() != delta) throw DomainError("base polynomial must live over k[S; sigma^delta]");
  if (abar.degree() < 1 || !abar.is_monic()) throw DomainError("base polynomial must be monic of positive degree");
  const int m = abar.degree();
  const auto p = field->p();
  const auto v = (ipow(p, m * delta) - 1) / (ipow(p, delta) - 1);
  return embed(expand(abar), Rational(0)) * SkewPoly::constant(LaurentSeries::upow(field, Rational(s * v)));
}

}  // namespace skewpoly
