#include "arbor/padic.hpp"
#include "arbor/error.hpp"
#include "arbor/numtheory.hpp"

#include <vector>

namespace arbor {

namespace {

// Truncated p-adic number in unit-split form: x = p^val * unit with the
// unit known modulo p^rel (rel >= 1, p does not divide unit). Zero-ish
// values carry only a lower bound: |x|_p <= p^(-bound). Exact zeros are
// kept separate so sparse coefficients do not destroy precision.
struct PadicNum {
    enum Kind { ExactZero, ZeroIsh, Split } kind = ExactZero;
    long val = 0;   // Split: exact valuation; ZeroIsh: bound (v >= bound)
    Int unit = 0;   // Split only; 0 < unit < p^rel, p does not divide unit
    long rel = 0;   // Split only
};

struct PadicCtx {
    Int p;
    long prec; // working relative precision
    std::vector<Int> pow_cache;

    PadicCtx(const Int& prime, long k) : p(prime), prec(k) {}

    Int ppow(long e) {
        // returns by value: growing the cache must not dangle callers
        if (e < 0) throw Error("p-adic: negative power request (internal)");
        while (static_cast<long>(pow_cache.size()) <= e) {
            if (pow_cache.empty()) pow_cache.push_back(Int(1));
            else pow_cache.push_back(pow_cache.back() * p);
        }
        return pow_cache[static_cast<size_t>(e)];
    }

    PadicNum from_rat(const Rat& r) {
        PadicNum x;
        if (r == 0) return x; // ExactZero
        long vn = valuation_int(r.get_num(), p);
        long vd = valuation_int(r.get_den(), p);
        Int un, ud;
        mpz_remove(un.get_mpz_t(), r.get_num().get_mpz_t(), p.get_mpz_t());
        mpz_remove(ud.get_mpz_t(), r.get_den().get_mpz_t(), p.get_mpz_t());
        x.kind = PadicNum::Split;
        x.val = vn - vd;
        x.rel = prec;
        const Int& m = ppow(prec);
        Int udinv;
        if (mpz_invert(udinv.get_mpz_t(), ud.get_mpz_t(), m.get_mpz_t()) == 0)
            throw Error("p-adic: unit not invertible (internal)");
        x.unit = ((un % m) * udinv) % m;
        if (x.unit < 0) x.unit += m;
        return x;
    }

    PadicNum mul(const PadicNum& a, const PadicNum& b) {
        if (a.kind == PadicNum::ExactZero || b.kind == PadicNum::ExactZero) return PadicNum{};
        if (a.kind == PadicNum::ZeroIsh || b.kind == PadicNum::ZeroIsh) {
            PadicNum r;
            r.kind = PadicNum::ZeroIsh;
            long av = (a.kind == PadicNum::ZeroIsh) ? a.val : a.val;
            long bv = (b.kind == PadicNum::ZeroIsh) ? b.val : b.val;
            r.val = av + bv; // bound adds in every mix of kinds
            return r;
        }
        PadicNum r;
        r.kind = PadicNum::Split;
        r.val = a.val + b.val;
        r.rel = std::min(a.rel, b.rel);
        const Int& m = ppow(r.rel);
        r.unit = (a.unit * b.unit) % m;
        return r;
    }

    PadicNum inv(const PadicNum& a, bool& failed) {
        if (a.kind != PadicNum::Split) {
            failed = true;
            return PadicNum{};
        }
        PadicNum r;
        r.kind = PadicNum::Split;
        r.val = -a.val;
        r.rel = a.rel;
        const Int& m = ppow(a.rel);
        Int u = a.unit % m;
        if (mpz_invert(r.unit.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t()) == 0) {
            failed = true;
            return PadicNum{};
        }
        return r;
    }

    PadicNum add(const PadicNum& a, const PadicNum& b) {
        if (a.kind == PadicNum::ExactZero) return b;
        if (b.kind == PadicNum::ExactZero) return a;
        if (a.kind == PadicNum::ZeroIsh && b.kind == PadicNum::ZeroIsh) {
            PadicNum r;
            r.kind = PadicNum::ZeroIsh;
            r.val = std::min(a.val, b.val);
            return r;
        }
        if (a.kind == PadicNum::ZeroIsh || b.kind == PadicNum::ZeroIsh) {
            const PadicNum& z = (a.kind == PadicNum::ZeroIsh) ? a : b;
            const PadicNum& s = (a.kind == PadicNum::ZeroIsh) ? b : a;
            long abs_prec = std::min(z.val, s.val + s.rel); // sum known mod p^abs_prec
            if (s.val >= abs_prec) {
                PadicNum r;
                r.kind = PadicNum::ZeroIsh;
                r.val = abs_prec;
                return r;
            }
            PadicNum r;
            r.kind = PadicNum::Split;
            r.val = s.val;
            r.rel = abs_prec - s.val;
            r.unit = s.unit % ppow(r.rel);
            return r;
        }
        // both Split
        const PadicNum& lo = (a.val <= b.val) ? a : b;
        const PadicNum& hi = (a.val <= b.val) ? b : a;
        long abs_prec = std::min(lo.val + lo.rel, hi.val + hi.rel);
        long rel_window = abs_prec - lo.val;
        if (rel_window <= 0) {
            PadicNum r;
            r.kind = PadicNum::ZeroIsh;
            r.val = abs_prec;
            return r;
        }
        const Int& m = ppow(rel_window);
        Int w = lo.unit % m;
        long shift = hi.val - lo.val;
        if (shift < rel_window) w = (w + hi.unit % ppow(rel_window - shift) * ppow(shift)) % m;
        if (w == 0) {
            PadicNum r;
            r.kind = PadicNum::ZeroIsh;
            r.val = abs_prec;
            return r;
        }
        long extra = valuation_int(w, p);
        PadicNum r;
        r.kind = PadicNum::Split;
        r.val = lo.val + extra;
        r.rel = rel_window - extra;
        Int u;
        mpz_remove(u.get_mpz_t(), w.get_mpz_t(), p.get_mpz_t());
        r.unit = u % ppow(r.rel);
        return r;
    }

    // Horner evaluation; coefficients are exact rationals.
    PadicNum eval_poly(const Poly& poly, const PadicNum& x, bool& failed) {
        PadicNum acc; // ExactZero
        for (int i = poly.degree(); i >= 0; --i) {
            acc = mul(acc, x);
            const Rat& c = poly.coeff(i);
            if (c != 0) acc = add(acc, from_rat(c));
            if (failed) return acc;
        }
        return acc;
    }
};

} // namespace

PadicResult valuation_of_iterate(const RatMap& f, const Rat& gamma, int n, const Int& p,
                                 const PadicConfig& cfg) {
    if (n < 1) throw PreconditionError("iterate level must be >= 1");
    if (p < 2 || !is_probable_prime(p)) throw PreconditionError("p must be prime");
    for (long prec = cfg.start_prec; prec <= cfg.max_prec; prec *= 2) {
        PadicCtx ctx(p, prec);
        bool failed = false;
        PadicNum x = ctx.from_rat(gamma);
        bool indeterminate = false;
        for (int step = 0; step < n; ++step) {
            PadicNum num = ctx.eval_poly(f.num, x, failed);
            PadicNum den = ctx.eval_poly(f.den, x, failed);
            if (failed) break;
            if (den.kind != PadicNum::Split) {
                // denominator indistinguishable from 0 at this precision
                indeterminate = true;
                break;
            }
            PadicNum deninv = ctx.inv(den, failed);
            if (failed) break;
            x = ctx.mul(num, deninv);
            if (x.kind == PadicNum::ExactZero) {
                indeterminate = true; // orbit value is exactly 0
                break;
            }
        }
        if (!failed && !indeterminate && x.kind == PadicNum::Split)
            return PadicResult{PadicStatus::Known, x.val};
        // otherwise escalate precision
        if (prec == cfg.max_prec) break;
        if (prec * 2 > cfg.max_prec && prec != cfg.max_prec) {
            // one final attempt exactly at the ceiling
            prec = cfg.max_prec / 2;
        }
    }
    return PadicResult{PadicStatus::Unknown, 0};
}

PadicPairResult valuation_of_pair_iterate(const RatMap& f, const Rat& x0, int n, const Int& p,
                                          const PadicConfig& cfg) {
    if (n < 1) throw PreconditionError("iterate level must be >= 1");
    if (p < 2 || !is_probable_prime(p)) throw PreconditionError("p must be prime");
    int d = f.degree();
    for (long prec = cfg.start_prec; prec <= cfg.max_prec; prec *= 2) {
        PadicCtx ctx(p, prec);
        bool failed = false;
        PadicNum P = ctx.eval_poly(f.num, ctx.from_rat(x0), failed);
        PadicNum Q = ctx.eval_poly(f.den, ctx.from_rat(x0), failed);
        for (int level = 2; level <= n && !failed; ++level) {
            // homogeneous recursion on the pair, same shape as the exact one
            PadicNum Pn, Qn; // ExactZero
            PadicNum ppow_acc; // P^i, built incrementally
            std::vector<PadicNum> qpow(static_cast<size_t>(d) + 1);
            qpow[0].kind = PadicNum::Split;
            qpow[0].val = 0;
            qpow[0].rel = prec;
            qpow[0].unit = 1;
            for (int i = 1; i <= d; ++i) qpow[i] = ctx.mul(qpow[i - 1], Q);
            PadicNum ppow = qpow[0]; // 1
            for (int i = 0; i <= d; ++i) {
                if (f.num.coeff(i) != 0)
                    Pn = ctx.add(Pn, ctx.mul(ctx.from_rat(f.num.coeff(i)), ctx.mul(ppow, qpow[d - i])));
                if (f.den.coeff(i) != 0)
                    Qn = ctx.add(Qn, ctx.mul(ctx.from_rat(f.den.coeff(i)), ctx.mul(ppow, qpow[d - i])));
                ppow = ctx.mul(ppow, P);
            }
            P = Pn;
            Q = Qn;
            (void)ppow_acc;
        }
        if (!failed && P.kind == PadicNum::Split && Q.kind == PadicNum::Split)
            return PadicPairResult{PadicStatus::Known, P.val, Q.val};
        if (prec == cfg.max_prec) break;
    }
    return PadicPairResult{PadicStatus::Unknown, 0, 0};
}

} // namespace arbor
