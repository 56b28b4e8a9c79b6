#pragma once

#include "arbor/rational.hpp"
#include "arbor/zpoly.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace arbor {

/// Dense univariate polynomial over Q in the variable z.
///
/// Coefficients are stored low-to-high; the highest stored entry is nonzero.
/// The zero polynomial has an empty coefficient vector and degree -1.
/// Values are immutable after construction; all operations are pure.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);

    static Poly zero() { return Poly(); }
    static Poly constant(const Rat& c);
    static Poly variable(); // z
    /// Convenience for literals: {c0, c1, ...} low-to-high.
    static Poly from_ints(std::initializer_list<long> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monic() const;

    /// Coefficient of z^i (zero beyond the degree).
    const Rat& coeff(size_t i) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    /// Leading coefficient; throws on the zero polynomial.
    const Rat& leading() const;

    Rat eval(const Rat& x) const;
    Poly derivative() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& c, const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    Poly pow(unsigned e) const;
    /// this / leading(), for nonzero polynomials.
    Poly monic() const;

    std::string to_string() const;

private:
    std::vector<Rat> coeffs_;
};

/// Quotient and remainder over Q: a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
/// Exact division; throws if b does not divide a.
Poly poly_divexact(const Poly& a, const Poly& b);
/// Monic gcd over Q (gcd of 0,0 is 0).
Poly poly_gcd(const Poly& a, const Poly& b);

/// Smallest positive d with d*p integral, and the cleared polynomial d*p.
std::pair<ZPoly, Int> poly_to_z(const Poly& p);
Poly poly_from_z(const ZPoly& a, const Int& den = Int(1));

/// Resultant with the Sylvester-determinant sign convention:
/// Res(p,q) = lc(p)^deg(q) * prod q(alpha) over roots alpha of p.
/// Throws on zero input.
Rat resultant(const Poly& p, const Poly& q);

/// Disc(p) = (-1)^(d(d-1)/2) Res(p, p') / lc(p), deg p >= 1.
Rat discriminant(const Poly& p);

/// Homogeneous substitution: sum_i outer_i * N^i * D^(formal_deg - i).
/// Requires formal_deg >= deg(outer).
Poly homog_compose(const Poly& outer, int formal_deg, const Poly& N, const Poly& D);

/// outer(N/D) with denominators cleared: returns (A, B) with
/// A/B = outer(N/D) and B = D^deg(outer).
std::pair<Poly, Poly> compose(const Poly& outer, const Poly& inner_num, const Poly& inner_den);

} // namespace arbor
