#include "arbor/modpoly.hpp"
#include "arbor/error.hpp"

#include <random>

namespace arbor {

uint64_t ModCtx::inv(uint64_t a) const {
    int64_t t = 0, nt = 1;
    int64_t r = static_cast<int64_t>(p), nr = static_cast<int64_t>(a % p);
    while (nr != 0) {
        int64_t q = r / nr;
        int64_t t2 = t - q * nt;
        t = nt;
        nt = t2;
        int64_t r2 = r - q * nr;
        r = nr;
        nr = r2;
    }
    if (r != 1) throw Error("mod inverse of a non-unit");
    return static_cast<uint64_t>((t % static_cast<int64_t>(p) + static_cast<int64_t>(p)) %
                                 static_cast<int64_t>(p));
}

void pp_trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int pp_deg(const PolyP& a) { return static_cast<int>(a.size()) - 1; }

PolyP pp_reduce(const ZPoly& a, const ModCtx& m) {
    PolyP r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), m.p);
    pp_trim(r);
    return r;
}

PolyP pp_mul(const PolyP& a, const PolyP& b, const ModCtx& m) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % m.p;
    }
    pp_trim(r);
    return r;
}

PolyP pp_sub(const PolyP& a, const PolyP& b, const ModCtx& m) {
    PolyP r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] % m.p;
    for (size_t i = 0; i < b.size(); ++i) r[i] = m.sub(r[i], b[i]);
    pp_trim(r);
    return r;
}

std::pair<PolyP, PolyP> pp_divmod(const PolyP& a, const PolyP& b, const ModCtx& m) {
    if (b.empty()) throw PreconditionError("mod-p division by zero");
    int da = pp_deg(a), db = pp_deg(b);
    if (da < db) return {{}, a};
    PolyP r = a, q(da - db + 1, 0);
    uint64_t linv = m.inv(b.back());
    for (int k = da; k >= db; --k) {
        if (pp_deg(r) < k || r[k] == 0) continue;
        uint64_t c = m.mul(r[k], linv);
        q[k - db] = c;
        for (int i = 0; i <= db; ++i) r[k - db + i] = m.sub(r[k - db + i], m.mul(c, b[i]));
        pp_trim(r);
    }
    pp_trim(q);
    return {q, r};
}

PolyP pp_rem(const PolyP& a, const PolyP& b, const ModCtx& m) { return pp_divmod(a, b, m).second; }

PolyP pp_monic(PolyP a, const ModCtx& m) {
    if (a.empty()) return a;
    uint64_t linv = m.inv(a.back());
    for (auto& c : a) c = m.mul(c, linv);
    return a;
}

PolyP pp_gcd(PolyP a, PolyP b, const ModCtx& m) {
    while (!b.empty()) {
        PolyP r = pp_rem(a, b, m);
        a = std::move(b);
        b = std::move(r);
    }
    return pp_monic(a, m);
}

PolyP pp_derivative(const PolyP& a, const ModCtx& m) {
    if (a.size() <= 1) return {};
    PolyP r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = (a[i] * (i % m.p)) % m.p;
    pp_trim(r);
    return r;
}

PolyP pp_powmod(const PolyP& base, const Int& e, const PolyP& f, const ModCtx& m) {
    PolyP result{1};
    PolyP b = pp_rem(base, f, m);
    long bits = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2));
    for (long i = bits - 1; i >= 0; --i) {
        result = pp_rem(pp_mul(result, result, m), f, m);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i)))
            result = pp_rem(pp_mul(result, b, m), f, m);
    }
    return result;
}

std::vector<std::pair<int, PolyP>> pp_ddf(const PolyP& f_in, const ModCtx& m) {
    std::vector<std::pair<int, PolyP>> out;
    PolyP f = pp_monic(f_in, m);
    PolyP x{0, 1};
    PolyP h = x; // x^(p^k) mod f, incrementally
    int k = 0;
    while (pp_deg(f) > 0) {
        ++k;
        if (2 * k > pp_deg(f)) {
            out.emplace_back(pp_deg(f), f);
            break;
        }
        h = pp_powmod(h, Int(static_cast<unsigned long>(m.p)), f, m);
        PolyP g = pp_gcd(pp_sub(h, x, m), f, m);
        if (pp_deg(g) > 0) {
            out.emplace_back(k, g);
            f = pp_divmod(f, g, m).first;
            h = pp_rem(h, f, m);
        }
    }
    return out;
}

namespace {

// Cantor-Zassenhaus equal-degree splitting for odd p.
void edf(const PolyP& f, int d, const ModCtx& m, std::mt19937_64& rng, std::vector<PolyP>& out) {
    if (pp_deg(f) == d) {
        out.push_back(pp_monic(f, m));
        return;
    }
    // exponent (p^d - 1) / 2
    Int e = int_pow(Int(static_cast<unsigned long>(m.p)), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    while (true) {
        PolyP r(static_cast<size_t>(pp_deg(f)), 0);
        for (auto& c : r) c = rng() % m.p;
        pp_trim(r);
        if (pp_deg(r) < 1) continue;
        PolyP s = pp_powmod(r, e, f, m);
        if (s.empty()) continue;
        s[0] = m.sub(s[0], 1); // s - 1
        pp_trim(s);
        PolyP g = pp_gcd(s, f, m);
        if (pp_deg(g) > 0 && pp_deg(g) < pp_deg(f)) {
            edf(g, d, m, rng, out);
            edf(pp_divmod(f, g, m).first, d, m, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<PolyP> pp_factor_squarefree(const PolyP& f, const ModCtx& m, uint64_t seed) {
    std::vector<PolyP> out;
    std::mt19937_64 rng(seed ^ (m.p * 0x9e3779b97f4a7c15ull));
    for (const auto& [d, block] : pp_ddf(f, m)) {
        if (pp_deg(block) == d) {
            out.push_back(pp_monic(block, m));
        } else {
            edf(block, d, m, rng, out);
        }
    }
    return out;
}

} // namespace arbor
