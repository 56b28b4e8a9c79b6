#pragma once

#include "arbor/poly.hpp"

#include <vector>

namespace arbor {

struct FactorPolyConfig {
    int degree_cap = 128;    // refuse inputs above this degree
    int pattern_primes = 5;  // degree-pattern primes tried before lifting
    uint64_t seed = 1;       // seeds the modular equal-degree splitting
};

/// Complete factorization over Q: input = unit * prod factors[i]^mult[i],
/// with monic irreducible factors sorted for determinism.
struct QFactorization {
    Rat unit;
    std::vector<std::pair<Poly, int>> factors;

    int total_factor_count() const {
        int n = 0;
        for (const auto& [f, m] : factors) {
            (void)f;
            n += m;
        }
        return n;
    }
};

/// Factor a nonzero polynomial over Q (squarefree decomposition, finite
/// field degree patterns for fast irreducibility, Hensel lifting plus
/// factor recombination otherwise).
/// Throws ResourceCapExceeded above the degree cap.
QFactorization factor_poly(const Poly& f, const FactorPolyConfig& cfg = {});

/// Certified irreducibility over Q (deg >= 1). Equivalent to
/// factor_poly(f).factors.size() == 1 with multiplicity 1, but usually
/// settled by degree patterns alone.
bool is_irreducible(const Poly& f, const FactorPolyConfig& cfg = {});

} // namespace arbor
