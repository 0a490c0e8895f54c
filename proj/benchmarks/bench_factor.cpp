#include <benchmark/benchmark.h>

#include "skewpoly/base_skew.hpp"
#include "skewpoly/factor.hpp"
#include "skewpoly/similarity.hpp"
#include "skewpoly/text.hpp"

namespace {

using namespace skewpoly;

void BM_Lift(benchmark::State& state) {
  auto k = FieldCtx::create(2, 1, 0, 2);
  const auto a = parse_skew(k, "T^2+T+u+u^5");
  const auto p = parse_base(k, 1, "S+1");
  const Rational prec(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hensel_lift_right_factor(a, p, Rational(-1), prec));
}
BENCHMARK(BM_Lift)->Arg(20)->Arg(40)->Arg(80);

void BM_Factor(benchmark::State& state) {
  auto k = FieldCtx::create(2, 2, 1, 2);
  const auto a = parse_skew(k, "(T^2+u*T+a*u)*(T+u^2)*(T+a+u)");
  const Rational prec(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(factor(a, prec));
}
BENCHMARK(BM_Factor)->Arg(20)->Arg(40);

void BM_IsIrreducible(benchmark::State& state) {
  auto k = FieldCtx::create(2, 2, 1, 2);
  const auto a = parse_skew(k, "T^3+u*T+u^2");
  for (auto _ : state) benchmark::DoNotOptimize(is_irreducible(a));
}
BENCHMARK(BM_IsIrreducible);

void BM_BaseFactor(benchmark::State& state) {
  auto k = FieldCtx::create(2, static_cast<int>(state.range(0)), 1, 2);
  const auto p = parse_base(k, 1, "S^4+a*S^3+S+a+1");
  for (auto _ : state) benchmark::DoNotOptimize(factor(p));
}
BENCHMARK(BM_BaseFactor)->Arg(2)->Arg(3)->Arg(4);

void BM_Similar(benchmark::State& state) {
  auto k = FieldCtx::create(2, 2, 1, 3);
  const auto x = parse_skew(k, "T^2+u*T+u");
  const auto y = parse_skew(k, "T^2+u^3");
  for (auto _ : state) benchmark::DoNotOptimize(similar(x, y));
}
BENCHMARK(BM_Similar);

void BM_Proximity(benchmark::State& state) {
  auto k = FieldCtx::create(2, 1, 0, 2);
  const auto p = parse_skew(k, "T^2+u*T+u");
  const auto q = parse_skew(k, "T^2+(u+u^3)*T+u+u^4");
  for (auto _ : state) benchmark::DoNotOptimize(similar_by_proximity(p, q));
}
BENCHMARK(BM_Proximity);

}  // namespace
