#include <gtest/gtest.h>

#include "skewpoly/error.hpp"
#include "skewpoly/factor.hpp"
#include "skewpoly/text.hpp"
#include "support.hpp"

using namespace skewpoly;
using skewpoly::gen::Rng;

namespace {

SkewPoly P(const FieldPtr& k, const char* text) { return parse_skew(k, text); }
BaseSkewPoly B(const FieldPtr& k, int ell, const char* text) { return parse_base(k, ell, text); }

}  // namespace

TEST(Lift, ExactFactorIsRecovered) {
  auto k = FieldCtx::create(2, 1, 0, 2);
  const auto r = hensel_lift_right_factor(P(k, "T^2+(1+u^2)*T+u"), B(k, 1, "S+1"), Rational(-1), Rational(8));
  EXPECT_EQ(r.G, P(k, "T+u"));
  EXPECT_EQ(r.F, P(k, "T+1"));
  EXPECT_FALSE(r.achieved_prec.has_value());
}

TEST(Lift, FullReductionGivesUnitCofactor) {
  auto k = FieldCtx::create(2, 1, 0, 2);
  const auto a = P(k, "T^2+u*T+u");
  const auto r = hensel_lift_right_factor(a, B(k, 2, "S+1"), Rational(-1, 3), Rational(10));
  EXPECT_EQ(r.F.degree(), 0);
  EXPECT_EQ(r.G, a);
}

TEST(Lift, ApproximatesTrueFactor) {
  auto k = FieldCtx::create(2, 1, 0, 2);
  const auto a = P(k, "(T+1+u)*(T+u)");
  const auto r = hensel_lift_right_factor(a, B(k, 1, "S+1"), Rational(-1), Rational(12));
  EXPECT_TRUE(valuation_at_least((r.G - P(k, "T+u")).valuation(), Rational(12)));
  EXPECT_TRUE(valuation_at_least(r.achieved_prec, Rational(12)));
}

TEST(Lift, RejectsBadInput) {
  auto k = FieldCtx::create(2, 1, 0, 2);
  const auto a = P(k, "T^2+(1+u^2)*T+u");
  EXPECT_THROW(hensel_lift_right_factor(a, B(k, 1, "S+1"), Rational(0), Rational(8)), DomainError);
  EXPECT_THROW(hensel_lift_right_factor(a, B(k, 1, "S"), Rational(-1), Rational(8)), DomainError);
  EXPECT_THROW(hensel_lift_right_factor(P(k, "T^2+u*T"), B(k, 1, "S+1"), Rational(-1), Rational(8)), DomainError);
}

TEST(Lift, RandomConstructedProducts) {
  Rng rng(51);
  int done = 0;
  for (int t = 0; t < 80; ++t) {
    const int b = gen::uniform(rng, 2, 3);
    auto k = FieldCtx::create(2, 2, 1, b);
    const int d = gen::uniform(rng, 1, 2);
    const int s = gen::uniform(rng, 1, 5);
    const auto g = gen::random_monoclinic(k, rng, d, s);
    const Rational mu(-s, ipow(b, d) - 1);
    auto f = gen::random_skew(k, rng, gen::uniform(rng, 0, 2), 0, 4);
    if (!is_etale(f)) continue;
    // G must carry the unique smallest slope.
    const auto fs = newton_polygon(f).slopes;
    if (!fs.empty() && fs.front().mu <= Rational(ipow(b, d)) * mu) continue;
    const auto a = f * g;
    const auto red = mu_reduction(g, mu).reduction;
    const Rational prec(30);
    const auto r = hensel_lift_right_factor(a, red, mu, prec);
    EXPECT_TRUE(valuation_at_least(r.achieved_prec, prec)) << format(a);
    EXPECT_EQ(mu_reduction(r.G, mu).reduction, red);
    EXPECT_TRUE(newton_polygon(r.G).is_monoclinic());
    for (std::size_t i = 1; i < r.residual_history.size(); ++i) {
      EXPECT_GT(r.residual_history[i], r.residual_history[i - 1]);
    }
    ++done;
  }
  EXPECT_GT(done, 30);
}

TEST(Irreducible, Examples) {
  auto k = FieldCtx::create(2, 1, 0, 2);
  EXPECT_TRUE(is_irreducible(P(k, "T^2+u*T+u")));
  EXPECT_FALSE(is_irreducible(P(k, "T^2+(1+u^2)*T+u")));
  EXPECT_TRUE(is_irreducible(P(k, "T+u")));
  EXPECT_TRUE(is_irreducible(P(k, "u^3*T")));
  EXPECT_FALSE(is_irreducible(P(k, "T^2+u*T")));
  EXPECT_THROW(is_irreducible(P(k, "u")), DomainError);
}

TEST(Irreducible, ProductsAreReducible) {
  Rng rng(52);
  for (int t = 0; t < 60; ++t) {
    auto k = FieldCtx::create(2, 1 + t % 2, t % 2, 2 + t % 2);
    const auto x = gen::random_skew(k, rng, gen::uniform(rng, 1, 2), -2, 3);
    const auto y = gen::random_skew(k, rng, gen::uniform(rng, 1, 2), -2, 3);
    EXPECT_FALSE(is_irreducible(x * y)) << format(x) << " * " << format(y);
  }
}

TEST(Factor, Examples) {
  auto k = FieldCtx::create(2, 1, 0, 2);
  auto f = factor(P(k, "T^2+(1+u^2)*T+u"), Rational(20));
  EXPECT_EQ(f.factors, (std::vector<SkewPoly>{P(k, "T+1"), P(k, "T+u")}));
  EXPECT_FALSE(f.residual.has_value());

  const auto irr = P(k, "T^2+u*T+u");
  f = factor(irr, Rational(20));
  EXPECT_EQ(f.factors, std::vector<SkewPoly>{irr});

  f = factor(P(k, "T^3+u*T^2"), Rational(20));
  EXPECT_EQ(f.factors, (std::vector<SkewPoly>{P(k, "T+u"), P(k, "T"), P(k, "T")}));

  f = factor(P(k, "u*T^2"), Rational(20));
  EXPECT_EQ(f.factors, (std::vector<SkewPoly>{P(k, "u*T"), P(k, "T")}));
}

TEST(Factor, RandomProducts) {
  Rng rng(53);
  for (int t = 0; t < 40; ++t) {
    auto k = FieldCtx::create(2, 1 + t % 2, t % 2, 2 + (t / 2) % 2);
    const auto x = gen::random_skew(k, rng, gen::uniform(rng, 1, 2), -2, 3);
    const auto y = gen::random_skew(k, rng, gen::uniform(rng, 1, 2), -2, 3);
    const auto a = x * y;
    const auto f = factor(a, Rational(25));
    auto product = P(k, "1");
    int total = 0;
    for (const auto& g : f.factors) {
      EXPECT_TRUE(is_irreducible(g)) << format(g);
      product = product * g;
      total += g.degree();
    }
    EXPECT_EQ(total, a.degree());
    EXPECT_TRUE(valuation_at_least((a - product).valuation(), Rational(25))) << format(a);
    EXPECT_GE(f.factors.size(), 2U);
  }
}

TEST(ClassicalForm, Examples) {
  auto k = FieldCtx::create(2, 1, 0, 2);
  const auto a = classical_form(B(k, 1, "S^2+S+1"), 1, 1);
  EXPECT_EQ(a, P(k, "u^12*T^2+u^6*T+u^3"));
  const auto np = newton_polygon(a);
  ASSERT_TRUE(np.is_monoclinic());
  EXPECT_EQ(np.slopes[0].mu, Rational(3));
  EXPECT_EQ(mu_reduction(a, Rational(3)).reduction, B(k, 1, "S^2+S+1"));
  EXPECT_TRUE(is_irreducible(a));

  EXPECT_EQ(classical_form(B(k, 1, "S^2+S+1"), 0, 1), P(k, "T^2+T+1"));

  auto k4 = FieldCtx::create(2, 2, 1, 2);
  EXPECT_EQ(classical_form(B(k4, 2, "S+a"), 1, 2), P(k4, "(T^2+a)*u"));
  EXPECT_EQ(classical_form(B(k4, 2, "S+a"), 1, 2), P(k4, "u^4*T^2+a*u"));

  auto k3 = FieldCtx::create(2, 1, 0, 3);
  EXPECT_THROW(classical_form(B(k3, 1, "S+1"), 1, 1), DomainError);
}
