#include <gtest/gtest.h>

#include "skewpoly/error.hpp"
#include "skewpoly/matrix.hpp"
#include "skewpoly/skew.hpp"
#include "skewpoly/text.hpp"
#include "support.hpp"

using namespace skewpoly;
using skewpoly::gen::Rng;

namespace {

SkewPoly P(const FieldPtr& k, const char* text) { return parse_skew(k, text); }
LaurentSeries L(const FieldPtr& k, const char* text) { return parse_series(k, text); }

}  // namespace

TEST(Skew, ProductOverF4MatchesConvolution) {
  auto k = FieldCtx::create(2, 2, 1, 2);
  const auto prod = P(k, "T^2+u*T+1") * P(k, "a*T+1+u");
  ASSERT_EQ(prod.degree(), 3);
  EXPECT_EQ(prod.coeff(3), L(k, "a"));
  EXPECT_EQ(prod.coeff(2), L(k, "1+(a+1)*u+u^4"));
  EXPECT_EQ(prod.coeff(1), L(k, "a+u+u^3"));
  EXPECT_EQ(prod.coeff(0), L(k, "1+u"));
}

TEST(Skew, CommutationRule) {
  auto k = FieldCtx::create(2, 1, 0, 2);
  EXPECT_EQ(P(k, "T") * P(k, "u"), P(k, "u^2*T"));
  auto k3 = FieldCtx::create(2, 1, 0, 3);
  EXPECT_EQ(P(k3, "T") * P(k3, "u"), P(k3, "u^3*T"));
  EXPECT_NE(P(k, "T") * P(k, "u"), P(k, "u") * P(k, "T"));
}

TEST(Skew, SmallProduct) {
  auto k = FieldCtx::create(2, 1, 0, 2);
  EXPECT_EQ(P(k, "(T+1)*(T+u)"), P(k, "T^2+(1+u^2)*T+u"));
  const auto prod = P(k, "T+1") * P(k, "T+u");
  EXPECT_EQ(prod.coeff(1), L(k, "1+u^2"));
}

TEST(Skew, DivRemExamples) {
  auto k = FieldCtx::create(2, 1, 0, 2);
  auto dr = divrem_right(P(k, "T^2"), P(k, "T+u"));
  EXPECT_EQ(dr.quotient, P(k, "T+u^2"));
  EXPECT_EQ(dr.remainder, P(k, "u^3"));
  EXPECT_TRUE(dr.exact);

  const auto a = P(k, "T^3+u*T+u^-2");
  dr = divrem_right(a, a);
  EXPECT_EQ(dr.quotient, P(k, "1"));
  EXPECT_TRUE(dr.remainder.is_zero());

  dr = divrem_right(P(k, "T^2+(1+u^2)*T+u"), P(k, "T+u"));
  EXPECT_EQ(dr.quotient, P(k, "T+1"));
  EXPECT_TRUE(dr.remainder.is_zero());
}

TEST(Skew, DivRemByZeroThrows) {
  auto k = FieldCtx::create(2, 1, 0, 2);
  EXPECT_THROW(divrem_right(P(k, "T"), SkewPoly(k)), DomainError);
}

TEST(Skew, DivRemWithSeriesLeadingCoefficient) {
  auto k = FieldCtx::create(3, 1, 0, 2);
  const auto a = P(k, "T^3+u*T^2+2");
  const auto b = P(k, "(1+u)*T+u^2");
  const auto dr = divrem_right(a, b, Rational(30));
  EXPECT_FALSE(dr.exact);
  const auto err = a - (dr.quotient * b + dr.remainder);
  EXPECT_TRUE(valuation_at_least(err.valuation_bound(), Rational(20)));
}

TEST(Skew, RingAxiomsOnRandomTriples) {
  Rng rng(1);
  for (int b : {2, 3}) {
    auto k = FieldCtx::create(2, 2, 1, b);
    for (int t = 0; t < 60; ++t) {
      const auto x = gen::random_skew(k, rng, gen::uniform(rng, 0, 3), -2, 3);
      const auto y = gen::random_skew(k, rng, gen::uniform(rng, 0, 3), -2, 3);
      const auto z = gen::random_skew(k, rng, gen::uniform(rng, 0, 3), -2, 3);
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ((x + y) * z, x * z + y * z);
      EXPECT_EQ((x * y).degree(), x.degree() + y.degree());
    }
  }
}

TEST(Skew, DivisionReconstructionAndUniqueness) {
  Rng rng(2);
  auto k = FieldCtx::create(3, 1, 0, 2);
  for (int t = 0; t < 100; ++t) {
    const auto a = gen::random_skew(k, rng, gen::uniform(rng, 0, 5), -3, 4);
    auto b = gen::random_skew(k, rng, gen::uniform(rng, 0, 3), -3, 4);
    b = b - SkewPoly::monomial(b.leading_coeff(), b.degree()) +
        SkewPoly::monomial(gen::u_pow(k, gen::uniform(rng, -2, 2)), b.degree());
    const auto dr = divrem_right(a, b);
    ASSERT_TRUE(dr.exact);
    EXPECT_EQ(dr.quotient * b + dr.remainder, a);
    EXPECT_LT(dr.remainder.degree(), b.degree());
    // Moving a multiple of B between quotient and remainder breaks the degree bound.
    const auto q2 = dr.quotient + P(k, "1");
    const auto r2 = a - q2 * b;
    EXPECT_GE(r2.degree(), b.degree());
  }
}

TEST(Skew, ConjugateExamples) {
  auto k = FieldCtx::create(2, 1, 0, 2);
  EXPECT_EQ(conjugate_by_upow(P(k, "T^2"), Rational(-1, 3), Rational(1, 3)), P(k, "u^-1*T^2"));
  const auto a = P(k, "T^3+u*T+1");
  EXPECT_EQ(conjugate_by_upow(a, Rational(0), Rational(0)), a);
  EXPECT_EQ(conjugate_by_upow(P(k, "T+u"), Rational(0), Rational(2)), P(k, "u^2*T+u^3"));
}

TEST(Skew, ConjugateMatchesMultiplication) {
  Rng rng(3);
  auto k = FieldCtx::create(2, 2, 1, 3);
  for (int t = 0; t < 50; ++t) {
    const auto a = gen::random_skew(k, rng, gen::uniform(rng, 0, 3), -2, 3);
    const Rational mu(gen::uniform(rng, -5, 5), gen::uniform(rng, 1, 4));
    const Rational nu(gen::uniform(rng, -5, 5), gen::uniform(rng, 1, 4));
    const auto lhs = conjugate_by_upow(a, mu, nu);
    const auto rhs = SkewPoly::constant(LaurentSeries::upow(k, nu)) * a * SkewPoly::constant(LaurentSeries::upow(k, mu));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Skew, EtaleAndStrip) {
  auto k = FieldCtx::create(2, 1, 0, 2);
  EXPECT_TRUE(is_etale(P(k, "T+u")));
  EXPECT_FALSE(is_etale(P(k, "T^2+u*T")));
  EXPECT_TRUE(is_etale(P(k, "u")));
  EXPECT_THROW(is_etale(P(k, "T+O(u^3)")), PrecisionError);

  auto s = strip_T(P(k, "T^2+u*T"));
  EXPECT_EQ(s.power, 1);
  EXPECT_EQ(s.rest, P(k, "T+u"));
  EXPECT_EQ(s.rest * SkewPoly::T(k, s.power), P(k, "T^2+u*T"));
  s = strip_T(P(k, "T+1"));
  EXPECT_EQ(s.power, 0);
  s = strip_T(P(k, "T^3"));
  EXPECT_EQ(s.power, 3);
  EXPECT_EQ(s.rest, P(k, "1"));
}

TEST(Skew, CompanionMatrices) {
  auto k = FieldCtx::create(3, 1, 0, 2);
  const auto c1 = companion(P(k, "T+2*u"));
  EXPECT_EQ(c1(0, 0), L(k, "u"));
  const auto c2 = companion(P(k, "T^2+u*T+u"));
  EXPECT_EQ(c2(1, 0), L(k, "1"));
  EXPECT_EQ(c2(0, 1), L(k, "2*u"));
  EXPECT_EQ(c2(1, 1), L(k, "2*u"));
  EXPECT_EQ(c2.determinant(Rational(10)).valuation(), Valuation(Rational(1)));
}

TEST(Skew, CompanionDeterminantValuation) {
  Rng rng(8);
  auto k = FieldCtx::create(2, 2, 1, 2);
  for (int t = 0; t < 40; ++t) {
    auto a = gen::random_skew(k, rng, gen::uniform(rng, 1, 4), -2, 4, true);
    if (!is_etale(a)) continue;
    const auto det = companion(a).determinant(Rational(40));
    EXPECT_EQ(det.valuation(), a.coeffs()[0].valuation());
  }
}

TEST(Skew, ChangeOfBasis) {
  auto k = FieldCtx::create(2, 2, 1, 2);
  const auto c = companion(P(k, "T^2+a*u*T+u^3"));
  EXPECT_EQ(change_basis(c, SkewMatrix::identity(k, 2)), c);

  const auto m = companion(P(k, "T+a"));
  const auto d = SkewMatrix::diagonal({L(k, "u")});
  EXPECT_EQ(change_basis(m, d)(0, 0), L(k, "a*u"));

  SkewMatrix basis(k, 2);
  basis(0, 0) = L(k, "1");
  basis(0, 1) = L(k, "u");
  basis(1, 1) = L(k, "a");
  const auto there = change_basis(c, basis);
  const auto back = change_basis(there, basis.inverse(Rational(0)));
  EXPECT_EQ(back, c);
}
