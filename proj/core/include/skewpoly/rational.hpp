#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace skewpoly {

using Rational = boost::rational<std::int64_t>;

/// A valuation in Q ∪ {+∞}. An empty optional stands for +∞.
using Valuation = std::optional<Rational>;

std::int64_t floor(const Rational& x);
std::int64_t ceil(const Rational& x);
inline bool is_integer(const Rational& x) { return x.denominator() == 1; }

/// Fractional part in [0, 1).
Rational frac(const Rational& x);

std::int64_t ipow(std::int64_t base, int exp);

/// "n" or "n/d".
std::string to_string(const Rational& x);

/// Accepts "n" or "n/d" with an optional sign. Throws ParseError.
Rational parse_rational(std::string_view text);

/// "inf" for +∞.
std::string to_string(const Valuation& v);

/// Ordering on Q ∪ {+∞}.
inline bool valuation_less(const Valuation& a, const Valuation& b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}
inline Valuation valuation_min(const Valuation& a, const Valuation& b) {
  return valuation_less(b, a) ? b : a;
}
inline bool valuation_at_least(const Valuation& v, const Rational& bound) {
  return !v || *v >= bound;
}

}  // namespace skewpoly
