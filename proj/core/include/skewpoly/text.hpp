#pragma once

#include <string>
#include <string_view>

#include "skewpoly/base_skew.hpp"
#include "skewpoly/field.hpp"
#include "skewpoly/series.hpp"
#include "skewpoly/skew.hpp"

namespace skewpoly {

// Grammar shared by all parsers: integers, the symbols a (generator of k),
// u, T, S, the operators + - * ^ and parentheses. Exponents are integers,
// `u^-1`, or parenthesized rationals `u^(2/3)`; only u takes negative or
// fractional exponents. `O(u^r)` (or `O(1)`) adds a precision marker.
// Throws ParseError on malformed text or symbols foreign to the ring.

FFElem parse_element(const FieldPtr& field, std::string_view text);
LaurentSeries parse_series(const FieldPtr& field, std::string_view text);
/// Products are evaluated with T·c = φ(c)·T, so "T*u" equals "u^b*T".
SkewPoly parse_skew(const FieldPtr& field, std::string_view text);
BaseSkewPoly parse_base(const FieldPtr& field, int ell, std::string_view text);

/// Descending powers of a, e.g. `2*a^2+a+1`.
std::string format(const FieldCtx& field, FFElem x);
/// Ascending exponents, e.g. `u^-1+(a+1)*u^(2/3)+O(u^(5/3))`.
std::string format(const LaurentSeries& x);
/// Descending powers of T, e.g. `T^2+(1+u^2)*T+u`.
std::string format(const SkewPoly& x);
/// Descending powers of S.
std::string format(const BaseSkewPoly& x);
/// Commutative polynomial in Z, descending.
std::string format(const FieldCtx& field, const KPoly& f);

}  // namespace skewpoly
