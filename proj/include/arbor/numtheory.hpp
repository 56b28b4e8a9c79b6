#pragma once

#include "arbor/rational.hpp"
#include "arbor/error.hpp"

#include <map>
#include <optional>
#include <vector>

namespace arbor {

/// v_p(x) for x != 0; nullopt encodes the valuation of 0 (= +infinity).
std::optional<long> valuation(const Rat& x, const Int& p);
/// v_p(n) for a nonzero integer.
long valuation_int(const Int& n, const Int& p);

struct FactorEffort {
    unsigned long trial_bound = 1000000; // trial-divide by primes <= this
    unsigned long rho_iters = 1u << 20;  // Brent-rho budget per composite
};

enum class CofactorStatus { Unit, ProbablePrime, Composite };

/// Partial factorization: value = sign * prod p^e * cofactor, where the
/// cofactor has no prime factor below the trial bound. Exponents are signed
/// for rational input (denominator primes count negative).
struct ValuationProfile {
    Rat value;
    std::map<Int, long> factors;
    Int cofactor_num = 1; // unfactored part of the numerator (positive)
    Int cofactor_den = 1; // unfactored part of the denominator (positive)
    int sign = 1;
    CofactorStatus num_status = CofactorStatus::Unit;
    CofactorStatus den_status = CofactorStatus::Unit;

    bool complete() const {
        return num_status != CofactorStatus::Composite && den_status != CofactorStatus::Composite &&
               cofactor_num == 1 && cofactor_den == 1;
    }
    /// Multiply the profile back out (must reproduce `value` exactly).
    Rat reconstruct() const;
};

/// Factor a nonzero integer (n != 0).
ValuationProfile factor_int(const Int& n, const FactorEffort& effort = {});
/// Factor numerator and denominator of a nonzero rational.
ValuationProfile factor_rat(const Rat& x, const FactorEffort& effort = {});

bool is_probable_prime(const Int& n);
bool is_square(const Int& n);
/// n = y^2 or n = -y^2.
bool is_pm_square(const Int& n);

/// Primes <= bound, cached ascending.
const std::vector<unsigned long>& primes_up_to(unsigned long bound);

enum class HeightProvenance { ExactLogOfInteger, SumOfLogs };

/// A nonnegative real on the natural-log scale. When the value is the log
/// of an explicitly known integer, that integer is carried exactly so tests
/// can compare by exponentiation instead of within float tolerance.
struct HeightValue {
    double log_value = 0.0;
    HeightProvenance provenance = HeightProvenance::ExactLogOfInteger;
    std::optional<Int> exact_arg; // log_value == log(exact_arg) when set
};

/// Height of a tuple. A single value gets the affine Weil height
/// log max(|p|, q); tuples of length >= 2 get the projective-style height
///   -sum_p min_i v_p(z_i) log p + max_i log|z_i|,
/// which equals log(max_i |c_i| / gcd_i c_i) over a common denominator.
/// Exact via gcd; no factorization needed. Throws on an all-zero tuple.
HeightValue height(const std::vector<Rat>& values);

/// rad = sum of log p over primes where the valuations are not all equal.
/// Requires a complete factorization of the value spread; throws
/// FactorizationIncomplete if the effort budget is insufficient.
HeightValue rad(const std::vector<Rat>& values, const FactorEffort& effort = {});
/// The prime set I(z_1,...,z_n) behind rad.
std::vector<Int> valuation_spread_primes(const std::vector<Rat>& values, const FactorEffort& effort = {});

/// Generalized gcd height: sum_p min(v_p^+(a), v_p^+(b)) log p.
/// Over Q this is log gcd(|num a|, |num b|); exact, no factorization.
HeightValue hgcd(const Rat& a, const Rat& b);

/// max(v_p(x), 0); the local positive part used by hgcd.
long vplus(const Rat& x, const Int& p);

} // namespace arbor
