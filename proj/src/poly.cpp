#include "arbor/poly.hpp"
#include "arbor/error.hpp"

#include <sstream>

namespace arbor {

namespace {
const Rat kZero(0);

void trim(std::vector<Rat>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}
} // namespace

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim(coeffs_);
}

Poly Poly::constant(const Rat& c) {
    if (c == 0) return Poly();
    return Poly(std::vector<Rat>{c});
}

Poly Poly::variable() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

Poly Poly::from_ints(std::initializer_list<long> coeffs) {
    std::vector<Rat> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.emplace_back(c);
    return Poly(std::move(v));
}

bool Poly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

const Rat& Poly::coeff(size_t i) const {
    if (i >= coeffs_.size()) return kZero;
    return coeffs_[i];
}

const Rat& Poly::leading() const {
    if (coeffs_.empty()) throw PreconditionError("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rat Poly::eval(const Rat& x) const {
    if (coeffs_.empty()) return Rat(0);
    auto [zp, den] = poly_to_z(*this);
    Rat v = zp_eval(zp, x);
    v /= Rat(den);
    return v;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rat> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(d));
}

Poly Poly::operator-() const {
    std::vector<Rat> c = coeffs_;
    for (auto& x : c) x = -x;
    return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    // clear denominators so the inner loop runs on mpz
    auto [za, da] = poly_to_z(a);
    auto [zb, db] = poly_to_z(b);
    ZPoly zc = zp_mul(za, zb);
    return poly_from_z(zc, da * db);
}

Poly operator*(const Rat& c, const Poly& a) {
    if (c == 0) return Poly();
    std::vector<Rat> r = a.coeffs_;
    for (auto& x : r) x *= c;
    return Poly(std::move(r));
}

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::constant(Rat(1));
    Poly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) throw PreconditionError("monic() of zero polynomial");
    if (is_monic()) return *this;
    Rat inv = 1 / leading();
    return inv * *this;
}

std::string Poly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rat a = abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i >= 1) {
            if (a != 1 && i >= 1) os << "*";
            os << "z";
        }
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw PreconditionError("division by zero polynomial");
    std::vector<Rat> r(a.coeffs().begin(), a.coeffs().end());
    int db = b.degree();
    int da = static_cast<int>(r.size()) - 1;
    if (da < db) return {Poly(), a};
    std::vector<Rat> q(da - db + 1, Rat(0));
    Rat inv = 1 / b.leading();
    for (int k = da; k >= db; --k) {
        if (r[k] == 0) continue;
        Rat qc = r[k] * inv;
        q[k - db] = qc;
        for (int i = 0; i <= db; ++i) r[k - db + i] -= qc * b.coeff(i);
    }
    r.resize(db > 0 ? db : 0);
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly poly_divexact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw PreconditionError("inexact polynomial division");
    return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    auto [za, da] = poly_to_z(a);
    auto [zb, db] = poly_to_z(b);
    (void)da;
    (void)db;
    ZPoly g = zp_gcd(za, zb);
    return poly_from_z(zp_primitive(g)).monic();
}

std::pair<ZPoly, Int> poly_to_z(const Poly& p) {
    Int den = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly z(p.coeffs().size());
    for (size_t i = 0; i < z.size(); ++i) {
        Int scale;
        mpz_divexact(scale.get_mpz_t(), den.get_mpz_t(), p.coeffs()[i].get_den().get_mpz_t());
        z[i] = p.coeffs()[i].get_num() * scale;
    }
    return {std::move(z), den};
}

Poly poly_from_z(const ZPoly& a, const Int& den) {
    std::vector<Rat> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = make_rat(a[i], den);
    return Poly(std::move(c));
}

Rat resultant(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) throw PreconditionError("resultant of zero polynomial");
    auto [zp, dp] = poly_to_z(p);
    auto [zq, dq] = poly_to_z(q);
    Int rz = zp_resultant(zp, zq);
    // Res(P/dp, Q/dq) = Res(P,Q) / (dp^deg q * dq^deg p)
    Int denom = int_pow(dp, q.degree()) * int_pow(dq, p.degree());
    return make_rat(rz, denom);
}

Rat discriminant(const Poly& p) {
    int d = p.degree();
    if (d < 1) throw PreconditionError("discriminant requires degree >= 1");
    if (d == 1) return Rat(1);
    Rat res = resultant(p, p.derivative());
    Rat disc = res / p.leading();
    if (((static_cast<long>(d) * (d - 1)) / 2) % 2 == 1) disc = -disc;
    return disc;
}

Poly homog_compose(const Poly& outer, int formal_deg, const Poly& N, const Poly& D) {
    if (formal_deg < outer.degree())
        throw PreconditionError("homog_compose: formal degree below actual degree");
    if (formal_deg < 0) return Poly();
    // Horner in N with a running power of D
    Poly acc = Poly::constant(outer.coeff(formal_deg));
    Poly dpow = Poly::constant(Rat(1));
    for (int i = formal_deg - 1; i >= 0; --i) {
        dpow = dpow * D;
        acc = acc * N + outer.coeff(i) * dpow;
    }
    return acc;
}

std::pair<Poly, Poly> compose(const Poly& outer, const Poly& inner_num, const Poly& inner_den) {
    int d = outer.degree();
    if (d < 0) return {Poly(), Poly::constant(Rat(1))};
    Poly a = homog_compose(outer, d, inner_num, inner_den);
    Poly b = inner_den.pow(static_cast<unsigned>(d));
    return {a, b};
}

} // namespace arbor
