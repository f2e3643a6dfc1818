#pragma once

#include <string>
#include <string_view>

#include "salemforge/poly.hpp"

namespace salemforge {

/// Parses either an ascending coefficient list ("1,1,0,-1", optionally in
/// brackets) or an expression in z with integer coefficients ("z^3 - z - 1",
/// "(z+1)(z^2-2)"). The Unicode minus sign is accepted. Throws ParseError with
/// line and column on malformed input.
IntPolynomial parse_polynomial(std::string_view text);

/// Ascending comma-separated coefficients; "0" for the zero polynomial.
std::string to_ascending(const IntPolynomial& p);

/// Human-readable expression in z with descending powers.
std::string to_expression(const IntPolynomial& p);

}  // namespace salemforge
