#pragma once

#include <gmpxx.h>
#include <string>

namespace arbor {

// GMP backs all exact arithmetic. `Rat` values are kept canonical
// throughout: gcd(|num|, den) = 1, den >= 1, zero is 0/1. mpq arithmetic
// preserves canonical form, so only construction from raw parts needs care;
// use make_rat for that.
using Int = mpz_class;
using Rat = mpq_class;

/// Build a canonical rational from numerator and denominator.
/// Throws PreconditionError if den == 0.
Rat make_rat(const Int& num, const Int& den);

/// Parse "p", "-p", or "p/q" (optional sign, decimal digits). Canonicalizes.
Rat rat_from_string(const std::string& s);

std::string to_string(const Rat& r);
std::string to_string(const Int& n);

/// True iff r is in canonical form (always true for values produced here).
bool is_canonical(const Rat& r);

/// log|n| computed safely for arbitrarily large n (n != 0).
double log_abs(const Int& n);

/// log max(|num|, den): the Weil height of a single rational (r != 0 ok, r == 0 gives 0).
double log_height(const Rat& r);

/// Integer power helpers.
Int int_pow(const Int& base, unsigned long e);
Rat rat_pow(const Rat& base, unsigned long e);

} // namespace arbor
