#include "arbor/ratmap.hpp"
#include "arbor/error.hpp"

#include <cmath>

namespace arbor {

namespace {

// Sound coprimality certificate: reduce mod a prime q with lc's nonzero;
// a trivial gcd mod q forces a trivial gcd over Q. Falls back to the exact
// gcd when the modular image is inconclusive.
bool coprime_mod_check(const Poly& a, const Poly& b) {
    static const unsigned long qs[] = {1000003ul, 2000003ul, 5003333ul};
    auto [za, da] = poly_to_z(a);
    auto [zb, db] = poly_to_z(b);
    (void)da;
    (void)db;
    for (unsigned long q : qs) {
        if (mpz_fdiv_ui(za.back().get_mpz_t(), q) == 0) continue;
        if (mpz_fdiv_ui(zb.back().get_mpz_t(), q) == 0) continue;
        std::vector<unsigned long> ra(za.size()), rb(zb.size());
        for (size_t i = 0; i < za.size(); ++i) ra[i] = mpz_fdiv_ui(za[i].get_mpz_t(), q);
        for (size_t i = 0; i < zb.size(); ++i) rb[i] = mpz_fdiv_ui(zb[i].get_mpz_t(), q);
        // Euclid over F_q
        auto deg = [](const std::vector<unsigned long>& v) {
            int d = static_cast<int>(v.size()) - 1;
            while (d >= 0 && v[d] == 0) --d;
            return d;
        };
        auto inv_mod = [q](unsigned long x) {
            long long t = 0, nt = 1, r = static_cast<long long>(q), nr = static_cast<long long>(x);
            while (nr != 0) {
                long long qq = r / nr;
                long long t2 = t - qq * nt;
                t = nt;
                nt = t2;
                long long r2 = r - qq * nr;
                r = nr;
                nr = r2;
            }
            return static_cast<unsigned long>((t % static_cast<long long>(q) + q) % q);
        };
        std::vector<unsigned long> A = ra, B = rb;
        int dA = deg(A), dB = deg(B);
        while (dB >= 0) {
            unsigned long linv = inv_mod(B[dB]);
            while (dA >= dB) {
                unsigned long c = static_cast<unsigned long>(
                    (static_cast<unsigned __int128>(A[dA]) * linv) % q);
                if (c != 0)
                    for (int i = 0; i <= dB; ++i) {
                        unsigned __int128 sub = static_cast<unsigned __int128>(c) * B[i];
                        unsigned long s = static_cast<unsigned long>(sub % q);
                        A[dA - dB + i] = (A[dA - dB + i] + q - s) % q;
                    }
                while (dA >= 0 && A[dA] == 0) --dA;
            }
            std::swap(A, B);
            std::swap(dA, dB);
        }
        return dA == 0; // gcd is a nonzero constant mod q
    }
    return false; // inconclusive
}

} // namespace

RatMap::RatMap(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw PreconditionError("rational map with zero denominator");
    if (num.is_zero()) {
        den = Poly::constant(Rat(1));
        return;
    }
    Poly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = poly_divexact(num, g);
        den = poly_divexact(den, g);
    }
    if (den.degree() == 0 && den.coeff(0) != 1) {
        num = (1 / den.coeff(0)) * num;
        den = Poly::constant(Rat(1));
    }
}

std::string RatMap::to_string() const {
    if (is_polynomial()) return num.to_string();
    return "(" + num.to_string() + ") / (" + den.to_string() + ")";
}

ProjQ apply(const RatMap& f, const ProjQ& x) {
    if (x.is_infinity()) {
        int dn = f.num.degree(), dd = f.den.degree();
        if (dn > dd) return ProjQ::infinity();
        if (dn < dd) return ProjQ(Rat(0));
        return ProjQ(f.num.leading() / f.den.leading());
    }
    Rat p = f.num.eval(x.value());
    Rat q = f.den.eval(x.value());
    if (q == 0) {
        // coprime num/den cannot share a root, so p != 0 here
        return ProjQ::infinity();
    }
    return ProjQ(p / q);
}

IteratePair iterate(const RatMap& f, int n, const IterateConfig& cfg) {
    if (n < 1) throw PreconditionError("iterate level must be >= 1");
    int d = f.degree();
    double logdeg = n * std::log2(static_cast<double>(d <= 1 ? 2 : d));
    if (d >= 2 && logdeg > std::log2(static_cast<double>(cfg.degree_cap)) + 1e-9)
        throw ResourceCapExceeded("iterate degree d^n exceeds cap");
    Poly P = f.num, Q = f.den;
    for (int k = 2; k <= n; ++k) {
        Poly Pn = homog_compose(f.num, d, P, Q);
        Poly Qn = homog_compose(f.den, d, P, Q);
        // defensive coprimality: the homogeneous composition of a map in
        // lowest terms stays coprime; verify cheaply, reduce exactly if not
        if (!Pn.is_zero() && !Qn.is_zero() && !coprime_mod_check(Pn, Qn)) {
            Poly g = poly_gcd(Pn, Qn);
            if (g.degree() > 0) {
                Pn = poly_divexact(Pn, g);
                Qn = poly_divexact(Qn, g);
            }
        }
        P = std::move(Pn);
        Q = std::move(Qn);
    }
    return IteratePair{n, std::move(P), std::move(Q)};
}

std::vector<std::pair<Rat, Rat>> iterate_scalar_pair(const RatMap& f, const Rat& x, int n) {
    if (n < 1) throw PreconditionError("iterate level must be >= 1");
    int d = f.degree();
    std::vector<std::pair<Rat, Rat>> out;
    out.reserve(n);
    Rat P = f.num.eval(x), Q = f.den.eval(x);
    out.emplace_back(P, Q);
    for (int k = 2; k <= n; ++k) {
        // (P,Q) <- (P1^h(P,Q), Q1^h(P,Q)) with scalars in place of polys
        Rat Pn(0), Qn(0), ppow(1);
        std::vector<Rat> qpow(static_cast<size_t>(d) + 1, Rat(1));
        for (int i = 1; i <= d; ++i) qpow[i] = qpow[i - 1] * Q;
        for (int i = 0; i <= d; ++i) {
            if (f.num.coeff(i) != 0) Pn += f.num.coeff(i) * ppow * qpow[d - i];
            if (f.den.coeff(i) != 0) Qn += f.den.coeff(i) * ppow * qpow[d - i];
            ppow *= P;
        }
        P = Pn;
        Q = Qn;
        out.emplace_back(P, Q);
    }
    return out;
}

Poly wronskian(const RatMap& f) {
    return f.den * f.num.derivative() - f.num * f.den.derivative();
}

} // namespace arbor
