#pragma once

#include "arbor/zpoly.hpp"

#include <cstdint>
#include <vector>

namespace arbor {

// Polynomial arithmetic over F_p for word-sized odd primes p < 2^31.
// Dense coefficient vectors, index = exponent, trailing entry nonzero.
// Used for factorization degree patterns and the modular stage of
// Zassenhaus; correctness matters more than asymptotics here, so the
// algorithms are the quadratic classics.
using PolyP = std::vector<uint64_t>;

struct ModCtx {
    uint64_t p;

    uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % p; }
    uint64_t sub(uint64_t a, uint64_t b) const { return (a + p - b % p) % p; }
    uint64_t mul(uint64_t a, uint64_t b) const { return (a * b) % p; } // p < 2^31
    uint64_t inv(uint64_t a) const;
};

void pp_trim(PolyP& a);
int pp_deg(const PolyP& a);
PolyP pp_reduce(const ZPoly& a, const ModCtx& m);
PolyP pp_mul(const PolyP& a, const PolyP& b, const ModCtx& m);
PolyP pp_sub(const PolyP& a, const PolyP& b, const ModCtx& m);
/// Remainder of a modulo b (b nonzero).
PolyP pp_rem(const PolyP& a, const PolyP& b, const ModCtx& m);
std::pair<PolyP, PolyP> pp_divmod(const PolyP& a, const PolyP& b, const ModCtx& m);
PolyP pp_gcd(PolyP a, PolyP b, const ModCtx& m); // monic gcd
PolyP pp_monic(PolyP a, const ModCtx& m);
PolyP pp_derivative(const PolyP& a, const ModCtx& m);
/// base^e mod f, with a big-integer exponent.
PolyP pp_powmod(const PolyP& base, const Int& e, const PolyP& f, const ModCtx& m);

/// Distinct-degree factorization of a monic squarefree polynomial:
/// returns (degree d, product of all irreducible factors of degree d).
std::vector<std::pair<int, PolyP>> pp_ddf(const PolyP& f, const ModCtx& m);

/// Full factorization of a monic squarefree polynomial into monic
/// irreducibles (Cantor-Zassenhaus splitting, deterministic seeding).
std::vector<PolyP> pp_factor_squarefree(const PolyP& f, const ModCtx& m, uint64_t seed);

} // namespace arbor
