#pragma once

#include "arbor/ratmap.hpp"

#include <string>

namespace arbor {

/// Parse a univariate expression in z over Q into a rational map.
///
/// Grammar: + - * / ^ with the usual precedence (^ highest,
/// right-associative; then unary minus; then * and /; then + and -).
/// '/' is ordinary division of rational functions, applied uniformly;
/// "1/2" is the rational one half and "1/2z" parses as (1/2)*z.
/// Juxtaposition multiplies when the right operand is 'z' or a
/// parenthesized group: "2z", "4z^2", "z(z+1)", "(z-1)(z+1)".
/// Exponents are nonnegative integer literals.
///
/// Throws ParseError (with byte position) on malformed input, on a
/// variable other than z, and on a zero denominator.
RatMap parse_map(const std::string& text);

} // namespace arbor
