#pragma once

#include <string_view>

#include "cyclodiv/poly.hpp"

namespace cyclodiv {

inline constexpr unsigned long kMaxParsedExponent = 100'000;

/// Parses a polynomial in x. Grammar:
///
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor (['*'] factor)*
///   factor := atom ['^' uint]
///   atom   := integer | 'x' | '(' expr ')' | 'phi' '(' uint ')'
///
/// Juxtaposition multiplies ("2x^3"), so every canonical rendering parses
/// back. phi(d) is the d-th cyclotomic polynomial. Throws ParseError with
/// the byte offset of the problem.
IntPoly parse_poly(std::string_view text);

/// Ascending comma-separated integer coefficients, e.g. "-1,0,1" for x^2 - 1.
IntPoly parse_coeffs(std::string_view text);

} // namespace cyclodiv
