#include "arbor/rational.hpp"
#include "arbor/error.hpp"

#include <cmath>

namespace arbor {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat rat_from_string(const std::string& s) {
    mpq_class r;
    if (r.set_str(s, 10) != 0) throw PreconditionError("bad rational literal: " + s);
    if (r.get_den() == 0) throw PreconditionError("rational with zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }
std::string to_string(const Int& n) { return n.get_str(); }

bool is_canonical(const Rat& r) {
    if (r.get_den() <= 0) return false;
    Int g;
    mpz_gcd(g.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return g == 1;
}

double log_abs(const Int& n) {
    // mpz_get_d overflows past ~2^1024; split into mantissa and exponent.
    signed long exp;
    double m = mpz_get_d_2exp(&exp, n.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(exp) * std::log(2.0);
}

double log_height(const Rat& r) {
    if (r == 0) return 0.0;
    Int n = abs(r.get_num());
    const Int& d = r.get_den();
    return log_abs(n >= d ? n : d);
}

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
    return r; // powers of a canonical rational stay canonical
}

} // namespace arbor
