#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "skewpoly/field.hpp"
#include "skewpoly/skew.hpp"

namespace {

using namespace skewpoly;

SkewPoly random_poly(const FieldPtr& k, std::mt19937_64& rng, int degree, int terms) {
  std::uniform_int_distribution<std::uint32_t> elem(1, k->order() - 1);
  std::uniform_int_distribution<int> expo(-4, 12);
  std::vector<LaurentSeries> coeffs;
  for (int i = 0; i <= degree; ++i) {
    std::vector<LaurentSeries::Term> t;
    for (int j = 0; j < terms; ++j) t.push_back({expo(rng), k->element(elem(rng))});
    coeffs.push_back(LaurentSeries::from_terms(k, 1, std::move(t)));
  }
  return SkewPoly(k, std::move(coeffs));
}

void BM_FieldMul(benchmark::State& state) {
  auto k = FieldCtx::create(2, 4, 1, 2);
  auto x = k->gen();
  const auto y = k->from_int(1);
  for (auto _ : state) {
    x = k->add(k->mul(x, x), y);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldMul);

void BM_SeriesMul(benchmark::State& state) {
  auto k = FieldCtx::create(2, 2, 1, 2);
  std::mt19937_64 rng(1);
  const auto a = random_poly(k, rng, 0, static_cast<int>(state.range(0))).coeff(0);
  const auto b = random_poly(k, rng, 0, static_cast<int>(state.range(0))).coeff(0);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMul)->Arg(4)->Arg(16)->Arg(64);

void BM_SkewMul(benchmark::State& state) {
  auto k = FieldCtx::create(2, 2, 1, 2);
  std::mt19937_64 rng(2);
  const int d = static_cast<int>(state.range(0));
  const auto a = random_poly(k, rng, d, 3);
  const auto b = random_poly(k, rng, d, 3);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SkewMul)->Arg(2)->Arg(4)->Arg(6);

void BM_DivRem(benchmark::State& state) {
  auto k = FieldCtx::create(2, 2, 1, 2);
  std::mt19937_64 rng(3);
  const int d = static_cast<int>(state.range(0));
  const auto a = random_poly(k, rng, 2 * d, 3);
  auto b = random_poly(k, rng, d, 3);
  std::vector<LaurentSeries> c(b.coeffs().begin(), b.coeffs().end());
  c.back() = LaurentSeries::from_int(k, 1);
  b = SkewPoly(k, std::move(c));
  for (auto _ : state) benchmark::DoNotOptimize(divrem_right(a, b));
}
BENCHMARK(BM_DivRem)->Arg(1)->Arg(2)->Arg(3);

}  // namespace
