#include "arbor/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace arbor {

long valuation_int(const Int& n, const Int& p) {
    if (n == 0) throw PreconditionError("valuation of zero");
    Int reduced;
    return static_cast<long>(mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

std::optional<long> valuation(const Rat& x, const Int& p) {
    if (p < 2 || !is_probable_prime(p)) throw PreconditionError("valuation at a non-prime");
    if (x == 0) return std::nullopt;
    long vn = valuation_int(x.get_num(), p);
    long vd = valuation_int(x.get_den(), p);
    return vn - vd;
}

const std::vector<unsigned long>& primes_up_to(unsigned long bound) {
    static std::vector<unsigned long> primes;
    static unsigned long sieved_to = 0;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (bound > sieved_to) {
        unsigned long hi = std::max<unsigned long>(bound, 2 * sieved_to);
        hi = std::max<unsigned long>(hi, 1 << 16);
        std::vector<bool> comp(hi + 1, false);
        primes.clear();
        for (unsigned long i = 2; i <= hi; ++i) {
            if (comp[i]) continue;
            primes.push_back(i);
            for (unsigned long j = i * i; j <= hi; j += i) comp[j] = true;
        }
        sieved_to = hi;
    }
    // primes is sorted; callers iterate while <= their bound
    return primes;
}

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

bool is_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_pm_square(const Int& n) {
    Int a = abs(n);
    return mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

namespace {

// Brent's cycle variant of Pollard rho. Deterministic: constants chosen per
// attempt. Returns a nontrivial factor or 0 on budget exhaustion.
Int rho_split(const Int& n, unsigned long budget) {
    if (mpz_even_p(n.get_mpz_t())) return Int(2);
    for (unsigned long c = 1; c <= 8; ++c) {
        Int y = 2, q = 1, g = 1, x = 2, ys = 2;
        unsigned long r = 1;
        unsigned long spent = 0;
        const unsigned long m = 128;
        while (g == 1 && spent < budget / 8) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) {
                y = (y * y + c) % n;
            }
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    Int d = x - y;
                    if (d < 0) d += n;
                    q = q * d % n;
                }
                spent += lim;
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
            }
            r *= 2;
        }
        if (g == n) {
            // the batched gcd collapsed; redo one step at a time
            g = 1;
            unsigned long guard = 4 * m;
            while (g == 1 && guard-- > 0) {
                ys = (ys * ys + c) % n;
                Int d = x - ys;
                if (d < 0) d += n;
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != 1 && g != n) return g;
    }
    return Int(0);
}

void factor_positive(Int n, const FactorEffort& effort, std::map<Int, long>& out, Int& cofactor,
                     CofactorStatus& status, int exp_sign) {
    // trial division first
    const auto& ps = primes_up_to(effort.trial_bound);
    for (unsigned long p : ps) {
        if (p > effort.trial_bound) break;
        if (n == 1) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            Int pz(p);
            Int red;
            long e = static_cast<long>(mpz_remove(red.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
            out[pz] += exp_sign * e;
            n = red;
        }
        // early out: remaining part below (trial_bound)^2 must be prime
        if (n != 1 && mpz_cmp_ui(n.get_mpz_t(), p * p) < 0) break;
    }
    if (n == 1) {
        cofactor = 1;
        status = CofactorStatus::Unit;
        return;
    }
    // split what remains with rho + recursion on probable-prime pieces
    std::vector<Int> stack{n};
    std::vector<Int> hard;
    while (!stack.empty()) {
        Int m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (is_probable_prime(m)) {
            Int red;
            // m may divide other pieces' product; just count this piece
            long e = 1;
            out[m] += exp_sign * e;
            (void)red;
            continue;
        }
        if (is_square(m)) {
            Int r;
            mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
            stack.push_back(r);
            stack.push_back(r);
            continue;
        }
        Int d = rho_split(m, effort.rho_iters);
        if (d == 0) {
            hard.push_back(m);
            continue;
        }
        stack.push_back(d);
        Int q;
        mpz_divexact(q.get_mpz_t(), m.get_mpz_t(), d.get_mpz_t());
        stack.push_back(q);
    }
    if (hard.empty()) {
        cofactor = 1;
        status = CofactorStatus::Unit;
    } else {
        cofactor = 1;
        for (const auto& h : hard) cofactor *= h;
        status = CofactorStatus::Composite;
    }
}

} // namespace

Rat ValuationProfile::reconstruct() const {
    Rat r(sign);
    for (const auto& [p, e] : factors) {
        Rat pe = (e >= 0) ? Rat(int_pow(p, static_cast<unsigned long>(e)))
                          : Rat(Int(1), int_pow(p, static_cast<unsigned long>(-e)));
        pe.canonicalize();
        r *= pe;
    }
    r *= make_rat(cofactor_num, cofactor_den);
    return r;
}

ValuationProfile factor_int(const Int& n, const FactorEffort& effort) {
    if (n == 0) throw PreconditionError("factor of zero");
    ValuationProfile prof;
    prof.value = Rat(n);
    prof.sign = (n < 0) ? -1 : 1;
    Int a = abs(n);
    if (a == 1) return prof;
    factor_positive(a, effort, prof.factors, prof.cofactor_num, prof.num_status, +1);
    if (prof.num_status == CofactorStatus::Composite && is_probable_prime(prof.cofactor_num))
        prof.num_status = CofactorStatus::ProbablePrime;
    return prof;
}

ValuationProfile factor_rat(const Rat& x, const FactorEffort& effort) {
    if (x == 0) throw PreconditionError("factor of zero");
    ValuationProfile prof;
    prof.value = x;
    prof.sign = (x < 0) ? -1 : 1;
    Int n = abs(x.get_num());
    if (n != 1) factor_positive(n, effort, prof.factors, prof.cofactor_num, prof.num_status, +1);
    Int d = x.get_den();
    if (d != 1) factor_positive(d, effort, prof.factors, prof.cofactor_den, prof.den_status, -1);
    // drop zero exponents that cancelled between num and den (cannot happen
    // for canonical input, but keep the invariant tight)
    for (auto it = prof.factors.begin(); it != prof.factors.end();)
        it = (it->second == 0) ? prof.factors.erase(it) : std::next(it);
    return prof;
}

HeightValue height(const std::vector<Rat>& values) {
    if (values.empty()) throw PreconditionError("height of empty tuple");
    bool all_zero = std::all_of(values.begin(), values.end(), [](const Rat& r) { return r == 0; });
    if (all_zero) throw PreconditionError("height of all-zero tuple");
    HeightValue h;
    h.provenance = HeightProvenance::ExactLogOfInteger;
    if (values.size() == 1) {
        const Rat& r = values[0];
        Int n = abs(r.get_num());
        Int arg = (n >= r.get_den()) ? n : Int(r.get_den());
        h.exact_arg = arg;
        h.log_value = log_abs(arg);
        return h;
    }
    // clear to a common denominator B: z_i = c_i / B
    Int B = 1;
    for (const auto& z : values) mpz_lcm(B.get_mpz_t(), B.get_mpz_t(), z.get_den().get_mpz_t());
    Int g = 0, maxc = 0;
    for (const auto& z : values) {
        Int scale;
        mpz_divexact(scale.get_mpz_t(), B.get_mpz_t(), z.get_den().get_mpz_t());
        Int c = z.get_num() * scale;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        Int a = abs(c);
        if (a > maxc) maxc = a;
    }
    // -sum min_i v_p(z_i) log p + max log|z_i| = log(max|c_i| / gcd c_i)
    Int arg;
    mpz_divexact(arg.get_mpz_t(), maxc.get_mpz_t(), g.get_mpz_t());
    h.exact_arg = arg;
    h.log_value = log_abs(arg);
    return h;
}

std::vector<Int> valuation_spread_primes(const std::vector<Rat>& values, const FactorEffort& effort) {
    if (values.size() < 2) throw PreconditionError("rad needs at least two values");
    for (const auto& z : values)
        if (z == 0) throw PreconditionError("rad of a zero value");
    // candidate primes: those dividing some numerator or denominator after
    // dividing out the common rational content (valuations all shifted
    // equally do not contribute)
    std::map<Int, std::vector<long>> vals;
    std::vector<ValuationProfile> profs;
    for (const auto& z : values) {
        ValuationProfile p = factor_rat(z, effort);
        if (!p.complete())
            throw FactorizationIncomplete("rad: cofactor not fully factored; raise the effort budget");
        profs.push_back(std::move(p));
    }
    for (size_t i = 0; i < profs.size(); ++i)
        for (const auto& [p, e] : profs[i].factors) vals[p].resize(values.size());
    for (auto& [p, row] : vals) {
        row.assign(values.size(), 0);
        for (size_t i = 0; i < profs.size(); ++i) {
            auto it = profs[i].factors.find(p);
            if (it != profs[i].factors.end()) row[i] = it->second;
        }
    }
    std::vector<Int> spread;
    for (const auto& [p, row] : vals) {
        bool all_equal = std::all_of(row.begin(), row.end(), [&](long v) { return v == row[0]; });
        if (!all_equal) spread.push_back(p);
    }
    return spread;
}

HeightValue rad(const std::vector<Rat>& values, const FactorEffort& effort) {
    std::vector<Int> primes = valuation_spread_primes(values, effort);
    HeightValue h;
    h.provenance = HeightProvenance::SumOfLogs;
    Int prod = 1;
    double s = 0;
    for (const auto& p : primes) {
        prod *= p;
        s += log_abs(p);
    }
    h.exact_arg = prod;
    h.log_value = s;
    return h;
}

long vplus(const Rat& x, const Int& p) {
    auto v = valuation(x, p);
    if (!v) throw PreconditionError("vplus of zero");
    return std::max(*v, 0L);
}

HeightValue hgcd(const Rat& a, const Rat& b) {
    if (a == 0 || b == 0) throw PreconditionError("hgcd of zero");
    // positive valuations live in the numerators of reduced fractions
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    HeightValue h;
    h.provenance = HeightProvenance::ExactLogOfInteger;
    h.exact_arg = g;
    h.log_value = log_abs(g);
    return h;
}

} // namespace arbor
