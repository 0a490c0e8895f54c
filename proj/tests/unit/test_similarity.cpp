#include <gtest/gtest.h>

#include <set>

#include "skewpoly/error.hpp"
#include "skewpoly/factor.hpp"
#include "skewpoly/newton.hpp"
#include "skewpoly/similarity.hpp"
#include "skewpoly/text.hpp"
#include "support.hpp"

using namespace skewpoly;
using skewpoly::gen::Rng;

namespace {

SkewPoly P(const FieldPtr& k, const char* text) { return parse_skew(k, text); }
BaseSkewPoly B(const FieldPtr& k, int ell, const char* text) { return parse_base(k, ell, text); }

// Straight from the definition, without the b-power clearing shortcut: some b^k·μ1 and
// b^j·μ2 with denominators prime to b, equal b-lengths, and a displacement i ≤ ℓ.
bool oracle_equivalent(Rational x, Rational y, int b) {
  while (std::gcd<std::int64_t>(x.denominator(), b) != 1) x *= b;
  while (std::gcd<std::int64_t>(y.denominator(), b) != 1) y *= b;
  const int lx = b_length(x, b);
  const int ly = b_length(y, b);
  if (lx != ly) return false;
  std::int64_t bi = 1;
  for (int i = 0; i <= lx; ++i, bi *= b) {
    if (is_integer(x - Rational(bi) * y) || is_integer(y - Rational(bi) * x)) return true;
  }
  return false;
}

std::vector<Rational> grid() {
  std::vector<Rational> out;
  std::set<Rational> seen;
  for (int den = 1; den <= 15; ++den) {
    for (int num = -5 * den; num <= 5 * den; ++num) {
      const Rational r(num, den);
      if (seen.insert(r).second) out.push_back(r);
    }
  }
  return out;
}

// Random irreducible étale polynomial of degree ≤ 3 with a single slope.
SkewPoly random_irreducible(const FieldPtr& k, Rng& rng) {
  for (;;) {
    const int d = gen::uniform(rng, 1, 3);
    const auto a = gen::random_monoclinic(k, rng, d, gen::uniform(rng, 1, 4));
    if (is_irreducible(a)) return a;
  }
}

}  // namespace

TEST(SlopesEquivalent, Examples) {
  for (int b : {2, 3}) {
    for (const auto& mu : {Rational(1, 3), Rational(-2, 7), Rational(0), Rational(5, 4)}) {
      EXPECT_TRUE(slopes_equivalent(mu, mu + Rational(5), b));
    }
  }
  EXPECT_TRUE(slopes_equivalent(Rational(1, 3), Rational(2, 3), 2));
  EXPECT_FALSE(slopes_equivalent(Rational(1, 3), Rational(1, 5), 2));
  EXPECT_TRUE(slopes_equivalent(Rational(1, 3), Rational(1, 6), 2));
  EXPECT_FALSE(slopes_equivalent(Rational(1, 7), Rational(3, 7), 2));
  EXPECT_TRUE(slopes_equivalent(Rational(1, 7), Rational(3, 7), 3));
}

TEST(SlopesEquivalent, MatchesDefinitionOnGrid) {
  const auto g = grid();
  for (int b : {2, 3}) {
    for (const auto& x : g) {
      for (const auto& y : g) {
        ASSERT_EQ(slopes_equivalent(x, y, b), oracle_equivalent(x, y, b))
            << x << " " << y << " b=" << b;
      }
    }
  }
}

TEST(SlopeClass, AgreesWithEquivalence) {
  const auto g = grid();
  for (int b : {2, 3}) {
    std::vector<SlopeClass> classes;
    for (const auto& x : g) classes.push_back(slope_class(x, b));
    for (std::size_t i = 0; i < g.size(); ++i) {
      EXPECT_TRUE(slopes_equivalent(classes[i].representative, g[i], b)) << g[i];
      for (std::size_t j = 0; j < g.size(); ++j) {
        ASSERT_EQ(classes[i] == classes[j], slopes_equivalent(g[i], g[j], b)) << g[i] << " " << g[j] << " b=" << b;
      }
    }
  }
}

TEST(SlopeClass, DigitWord) {
  // 1/3 in base 2 is 0.(01); −1/3 ≡ 2/3 is 0.(10); both rotate to 01.
  const auto c = slope_class(Rational(-1, 3), 2);
  EXPECT_EQ(c.ell, 2);
  EXPECT_EQ(c.digits, (std::vector<int>{0, 1}));
  EXPECT_EQ(c.representative, Rational(1, 3));
  EXPECT_EQ(slope_class(Rational(7), 2).ell, 0);
  EXPECT_EQ(clear_b_denominator(Rational(1, 12), 2), Rational(1, 3));
}

TEST(LiftBase, Examples) {
  auto k = FieldCtx::create(2, 1, 0, 2);
  const auto x = lift_base(B(k, 2, "S+1"), Rational(-1, 3));
  EXPECT_EQ(x, P(k, "u^-1*T^2+1"));
  EXPECT_EQ(monic(x), P(k, "T^2+u"));
  EXPECT_EQ(lift_base(B(k, 1, "S+1"), Rational(-1)), P(k, "u^-1*T+1"));
  EXPECT_EQ(lift_base(B(k, 1, "S^2+S+1"), Rational(0)), P(k, "T^2+T+1"));
  EXPECT_THROW(lift_base(B(k, 1, "S+1"), Rational(-1, 3)), DomainError);
}

TEST(LiftBase, SlopeAndReductionRoundTrip) {
  Rng rng(61);
  for (int t = 0; t < 150; ++t) {
    const int b = gen::uniform(rng, 2, 3);
    const int m = gen::uniform(rng, 1, 2);
    auto k = FieldCtx::create(b == 2 ? 2 : 3, m, gen::uniform(rng, 0, m - 1), b);
    const Rational mu(gen::uniform(rng, -12, 12), gen::uniform(rng, 1, 9));
    const auto ell = reduction_ell(mu, b);
    if (!is_integer(mu * Rational(ipow(b, ell) - 1))) continue;
    const auto p = gen::random_base(k, ell, rng, gen::uniform(rng, 1, 2));
    if (k->is_zero(p.coeff(0))) continue;
    const auto x = lift_base(p, mu);
    const auto np = newton_polygon(x);
    ASSERT_TRUE(np.is_monoclinic()) << format(x);
    EXPECT_EQ(np.slopes[0].mu, mu);
    const auto red = mu_reduction(x, mu).reduction;
    EXPECT_EQ(red, p.monic()) << format(x);
  }
}

TEST(Proximity, Examples) {
  auto k = FieldCtx::create(2, 1, 0, 2);
  auto r = similar_by_proximity(P(k, "T+u"), P(k, "T+u+u^3"));
  ASSERT_EQ(r.status, ProximityResult::Status::similar);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(valuation_at_least(r.check, Rational(30)));

  r = similar_by_proximity(P(k, "T+u"), P(k, "T+u"));
  ASSERT_EQ(r.status, ProximityResult::Status::similar);
  EXPECT_EQ(r.witness->exact_part(), SkewMatrix::identity(k, 1));

  r = similar_by_proximity(P(k, "T+u"), P(k, "T+u+u^2"));
  EXPECT_EQ(r.status, ProximityResult::Status::inapplicable);
  EXPECT_FALSE(r.reason.empty());
}

TEST(Proximity, WitnessAndConsistency) {
  Rng rng(62);
  int applied = 0;
  for (int t = 0; t < 60; ++t) {
    const int b = gen::uniform(rng, 2, 3);
    const int deg = gen::uniform(rng, 1, 2);
    auto k = FieldCtx::create(2, deg, deg - 1, b);
    const auto p = random_irreducible(k, rng);
    const auto v0 = *p.coeff(0).valuation();
    const auto threshold = Rational(b) * v0 / Rational(b - 1);
    const int lo = boost::rational_cast<int>(threshold) + 1;
    auto pert = gen::random_skew(k, rng, p.degree() - 1, lo, lo + 3);
    const auto q = p + pert;
    const auto r = similar_by_proximity(p, q);
    ASSERT_EQ(r.status, ProximityResult::Status::similar) << format(p) << " vs " << format(q) << ": " << r.reason;
    EXPECT_TRUE(valuation_at_least(r.check, Rational(30)));
    const auto& m = *r.witness;
    const auto cp = companion(p);
    const auto cq = companion(q);
    EXPECT_TRUE(valuation_at_least((m * cp - cq * m.phi()).valuation_bound(), Rational(30)));
    if (is_irreducible(q)) EXPECT_TRUE(similar(p, q).similar) << format(p) << " vs " << format(q);
    ++applied;
  }
  EXPECT_EQ(applied, 60);
}

TEST(CanonicalPair, Examples) {
  auto k = FieldCtx::create(2, 1, 0, 2);
  const auto c1 = canonical_pair(P(k, "T^2+u*T+u"));
  EXPECT_EQ(c1.mu, Rational(-1, 3));
  EXPECT_EQ(c1.slope_class, slope_class(Rational(-1, 3), 2));
  EXPECT_EQ(c1.witness, B(k, 2, "S+1"));
  EXPECT_EQ(c1.base_invariant, reduced_norm(B(k, 2, "S+1")));

  const auto c2 = canonical_pair(P(k, "T^2+u"));
  EXPECT_EQ(c2.slope_class, c1.slope_class);
  EXPECT_EQ(c2.witness, c1.witness);
  EXPECT_EQ(c2.base_invariant, c1.base_invariant);

  EXPECT_THROW(canonical_pair(P(k, "T^2+(1+u^2)*T+u")), DomainError);
}

TEST(CanonicalPair, RoundTrip) {
  Rng rng(63);
  for (int t = 0; t < 40; ++t) {
    auto k = FieldCtx::create(2, 2, 1, 2);
    const auto a = random_irreducible(k, rng);
    const auto c = canonical_pair(a);
    const auto lifted = lift_base(c.witness, c.mu);
    const auto c2 = canonical_pair(lifted);
    EXPECT_EQ(c2.mu, c.mu);
    EXPECT_EQ(c2.witness, c.witness);
    EXPECT_TRUE(similar(a, lifted).similar) << format(a);
  }
}

TEST(Similar, Examples) {
  auto k = FieldCtx::create(2, 1, 0, 2);
  EXPECT_TRUE(similar(P(k, "T^2+u"), P(k, "T^2+u*T+u")).similar);
  EXPECT_TRUE(similar(P(k, "T+u"), P(k, "T+u^3")).similar);
  EXPECT_FALSE(similar(P(k, "T+u"), P(k, "T^2+u")).similar);
  EXPECT_TRUE(similar(P(k, "T"), P(k, "u*T")).similar);
  EXPECT_FALSE(similar(P(k, "T"), P(k, "T+u")).similar);

  auto k4 = FieldCtx::create(2, 2, 0, 2);
  EXPECT_FALSE(similar(P(k4, "T+u"), P(k4, "T+a*u")).similar);
  auto k4f = FieldCtx::create(2, 2, 1, 2);
  EXPECT_TRUE(similar(P(k4f, "T+u"), P(k4f, "T+a*u")).similar);

  EXPECT_THROW(similar(P(k, "T^2+(1+u^2)*T+u"), P(k, "T+u")), DomainError);
}

TEST(Similar, InvariantUnderTransformations) {
  Rng rng(64);
  for (int t = 0; t < 40; ++t) {
    const int b = gen::uniform(rng, 2, 3);
    const int deg = gen::uniform(rng, 1, 2);
    auto k = FieldCtx::create(2, deg, deg - 1, b);
    const auto a = random_irreducible(k, rng);
    const auto mu = newton_polygon(a).slopes[0].mu;

    const auto conj = a.phi_coeffs(1);
    EXPECT_EQ(newton_polygon(conj).slopes[0].mu, Rational(b) * mu);
    EXPECT_TRUE(slopes_equivalent(mu, Rational(b) * mu, b));
    EXPECT_TRUE(similar(a, conj).similar) << format(a);

    const int m = gen::uniform(rng, -3, 3);
    const auto scaled = a * SkewPoly::constant(gen::u_pow(k, m));
    EXPECT_EQ(newton_polygon(scaled).slopes[0].mu, mu + Rational(m));
    EXPECT_TRUE(similar(a, scaled).similar) << format(a) << " m=" << m;
  }
}
