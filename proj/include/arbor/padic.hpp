#pragma once

#include "arbor/ratmap.hpp"

#include <optional>

namespace arbor {

struct PadicConfig {
    long start_prec = 32;  // initial relative precision, in p-adic digits
    long max_prec = 4096;  // ceiling; doubling stops here
};

enum class PadicStatus { Known, Unknown };

struct PadicResult {
    PadicStatus status = PadicStatus::Unknown;
    long valuation = 0; // meaningful only when Known
};

/// v_p(f^n(gamma)) without constructing the iterate value: the orbit is
/// tracked in truncated p-adic arithmetic with relative precision doubling
/// on demand up to the ceiling. Never returns a wrong value; if the
/// valuation cannot be certified (cancellation beyond the ceiling, a true
/// zero, or a pole on the orbit) the result is Unknown.
PadicResult valuation_of_iterate(const RatMap& f, const Rat& gamma, int n, const Int& p,
                                 const PadicConfig& cfg = {});

/// p-adic valuations of the homogeneous pair values (P_n(x), Q_n(x)),
/// computed by the scalar pair recursion in truncated p-adic arithmetic.
struct PadicPairResult {
    PadicStatus status = PadicStatus::Unknown;
    long v_num = 0;
    long v_den = 0;
};
PadicPairResult valuation_of_pair_iterate(const RatMap& f, const Rat& x, int n, const Int& p,
                                          const PadicConfig& cfg = {});

} // namespace arbor
