#include "arbor/zpoly.hpp"
#include "arbor/error.hpp"

#include <sstream>

namespace arbor {

void zp_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int zp_deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    zp_trim(r);
    return r;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    zp_trim(r);
    return r;
}

ZPoly zp_neg(ZPoly a) {
    for (auto& c : a) c = -c;
    return a;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    zp_trim(r);
    return r;
}

ZPoly zp_scale(const ZPoly& a, const Int& c) {
    if (c == 0) return {};
    ZPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

ZPoly zp_derivative(const ZPoly& a) {
    if (a.size() <= 1) return {};
    ZPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
    zp_trim(r);
    return r;
}

Int zp_content(const ZPoly& a) {
    Int g = 0;
    for (const auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly zp_primitive(const ZPoly& a) {
    Int c = zp_content(a);
    if (c == 0 || c == 1) return a;
    return zp_divexact_scalar(a, c);
}

ZPoly zp_divexact_scalar(const ZPoly& a, const Int& d) {
    ZPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        mpz_divexact(r[i].get_mpz_t(), a[i].get_mpz_t(), d.get_mpz_t());
    return r;
}

ZPoly zp_pseudo_rem(const ZPoly& a, const ZPoly& b) {
    if (b.empty()) throw PreconditionError("pseudo-remainder by zero polynomial");
    int da = zp_deg(a), db = zp_deg(b);
    if (da < db) return a;
    ZPoly r = a;
    const Int& lb = b.back();
    // invariant: lb^(da-db+1) * a = q*b + r, one factor of lb consumed per k
    for (int k = da; k >= db; --k) {
        if (r.empty()) return r;
        if (zp_deg(r) < db) {
            Int f = int_pow(lb, k - db + 1); // remaining unconsumed factors
            for (auto& c : r) c *= f;
            return r;
        }
        Int coef = (zp_deg(r) >= k) ? r[k] : Int(0);
        for (auto& c : r) c *= lb;
        if (coef != 0) {
            for (int i = 0; i <= db; ++i)
                mpz_submul(r[k - db + i].get_mpz_t(), coef.get_mpz_t(), b[i].get_mpz_t());
        }
        zp_trim(r);
    }
    return r;
}

bool zp_divides(const ZPoly& a, const ZPoly& b, ZPoly* q) {
    if (b.empty()) return false;
    if (a.empty()) {
        if (q) q->clear();
        return true;
    }
    int da = zp_deg(a), db = zp_deg(b);
    if (da < db) return false;
    ZPoly r = a, quot(da - db + 1, Int(0));
    const Int& lb = b.back();
    for (int k = da; k >= db; --k) {
        if (zp_deg(r) < k) continue;
        Int c = r[k];
        if (c == 0) continue;
        Int qc, rem;
        mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), lb.get_mpz_t());
        if (rem != 0) return false;
        quot[k - db] = qc;
        for (int i = 0; i <= db; ++i)
            mpz_submul(r[k - db + i].get_mpz_t(), qc.get_mpz_t(), b[i].get_mpz_t());
        zp_trim(r);
    }
    if (!r.empty()) return false;
    if (q) {
        zp_trim(quot);
        *q = quot;
    }
    return true;
}

// Subresultant PRS resultant (Cohen, Alg. 3.3.7). Exact over Z, including sign.
Int zp_resultant(ZPoly a, ZPoly b) {
    if (a.empty() || b.empty()) return 0;
    int s = 1;
    Int ca = zp_content(a), cb = zp_content(b);
    a = zp_divexact_scalar(a, ca);
    b = zp_divexact_scalar(b, cb);
    if (zp_deg(a) < zp_deg(b)) {
        if ((zp_deg(a) & 1) && (zp_deg(b) & 1)) s = -s;
        std::swap(a, b);
        std::swap(ca, cb);
    }
    Int t = int_pow(ca, zp_deg(b)) * int_pow(cb, zp_deg(a));
    if (zp_deg(b) == 0) {
        // primitive constant is +-1
        Int r = int_pow(b[0], zp_deg(a));
        return s * t * r;
    }
    Int g = 1, h = 1;
    while (true) {
        int d = zp_deg(a), e = zp_deg(b);
        int delta = d - e;
        if ((d & 1) && (e & 1)) s = -s;
        ZPoly r = zp_pseudo_rem(a, b);
        a = std::move(b);
        Int divisor = g * int_pow(h, delta);
        b = r.empty() ? ZPoly{} : zp_divexact_scalar(r, divisor);
        g = a.back();
        if (delta >= 1) {
            // h <- g^delta / h^(delta-1), exact in Z
            Int hn = int_pow(g, delta);
            if (delta > 1) mpz_divexact(hn.get_mpz_t(), hn.get_mpz_t(), int_pow(h, delta - 1).get_mpz_t());
            h = hn;
        }
        if (b.empty()) return 0; // positive-degree gcd
        if (zp_deg(b) == 0) break;
    }
    // res(a, b) with deg b == 0: lc(b)^deg(a) / h^(deg(a)-1)
    Int numr = int_pow(b[0], zp_deg(a));
    if (zp_deg(a) > 1) mpz_divexact(numr.get_mpz_t(), numr.get_mpz_t(), int_pow(h, zp_deg(a) - 1).get_mpz_t());
    return s * t * numr;
}

ZPoly zp_gcd(ZPoly a, ZPoly b) {
    if (a.empty()) {
        if (!b.empty() && b.back() < 0) return zp_neg(b);
        return b;
    }
    if (b.empty()) {
        if (a.back() < 0) return zp_neg(a);
        return a;
    }
    Int cont;
    mpz_gcd(cont.get_mpz_t(), zp_content(a).get_mpz_t(), zp_content(b).get_mpz_t());
    a = zp_primitive(a);
    b = zp_primitive(b);
    if (zp_deg(a) < zp_deg(b)) std::swap(a, b);
    // primitive PRS; fine at the degrees we feed it
    while (!b.empty()) {
        ZPoly r = zp_pseudo_rem(a, b);
        a = std::move(b);
        b = zp_primitive(r);
    }
    if (a.back() < 0) a = zp_neg(a);
    return zp_scale(a, cont);
}

Rat zp_eval(const ZPoly& a, const Rat& x) {
    if (a.empty()) return Rat(0);
    // Horner over Z: value = sum a_i u^i v^(d-i), then divide by v^d
    const Int& u = x.get_num();
    const Int& v = x.get_den();
    int d = zp_deg(a);
    Int acc = a[d];
    Int vpow = 1;
    for (int i = d - 1; i >= 0; --i) {
        vpow *= v;
        acc *= u;
        mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), vpow.get_mpz_t());
    }
    return make_rat(acc, vpow);
}

std::string zp_to_string(const ZPoly& a) {
    if (a.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = zp_deg(a); i >= 0; --i) {
        if (a[i] == 0) continue;
        if (!first) os << (a[i] > 0 ? " + " : " - ");
        else if (a[i] < 0) os << "-";
        Int c = abs(a[i]);
        if (c != 1 || i == 0) os << c.get_str();
        if (i >= 1) os << "z";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

} // namespace arbor
