#pragma once

#include "arbor/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arbor {

/// Rational map f = num/den in lowest terms (no common polynomial factor).
/// A polynomial map is the special case den = 1; if cancellation leaves a
/// constant denominator it is folded into the numerator. The scalar
/// normalization of (num, den) is otherwise preserved as given: iterate
/// values P_n(x), Q_n(x) depend on it.
struct RatMap {
    Poly num;
    Poly den;

    RatMap(Poly n, Poly d);

    int degree() const { return std::max(num.degree(), den.degree()); }
    bool is_polynomial() const { return den.degree() == 0 && den.coeff(0) == 1; }

    std::string to_string() const;
};

/// Point of P^1(Q): a rational number or the point at infinity.
struct ProjQ {
    std::optional<Rat> v; // nullopt = infinity

    ProjQ() : v(Rat(0)) {}
    ProjQ(const Rat& x) : v(x) {}
    static ProjQ infinity() { ProjQ p; p.v.reset(); return p; }

    bool is_infinity() const { return !v.has_value(); }
    const Rat& value() const { return *v; }
    bool operator==(const ProjQ& o) const { return v == o.v; }
    std::string to_string() const { return v ? arbor::to_string(*v) : "inf"; }
};

/// Apply f to a point of P^1 (exact, handles poles and infinity).
ProjQ apply(const RatMap& f, const ProjQ& x);

/// The n-th iterate as a homogeneous pair: P_n / Q_n = f^n with
/// P_n = P_1^h(P_{n-1}, Q_{n-1}) and Q_n = Q_1^h(P_{n-1}, Q_{n-1}),
/// where ^h is homogenization to degree deg(f). No rescaling is applied,
/// so scalar identities about P_n(x), Q_n(x) hold on the nose.
struct IteratePair {
    int level;
    Poly P;
    Poly Q;
};

struct IterateConfig {
    long degree_cap = 4096; // cap on deg(f)^n
};

/// Compute iterate(f, n); iterate(f, 1) = (num, den).
/// Throws ResourceCapExceeded when deg(f)^n would exceed the cap.
IteratePair iterate(const RatMap& f, int n, const IterateConfig& cfg = {});

/// Scalar counterpart of iterate: the exact values (P_j(x), Q_j(x)) for
/// j = 1..n, computed by the homogeneous recursion on numbers. Entry j-1
/// holds level j.
std::vector<std::pair<Rat, Rat>> iterate_scalar_pair(const RatMap& f, const Rat& x, int n);

/// c = Q1 * P1' - P1 * Q1'; its roots are the finite critical points.
Poly wronskian(const RatMap& f);

} // namespace arbor
