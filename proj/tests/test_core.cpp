#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arbor/error.hpp"
#include "arbor/poly.hpp"
#include "arbor/ratmap.hpp"

#include <random>

using namespace arbor;

namespace {

Rat Q(long n, long d = 1) { return make_rat(Int(n), Int(d)); }

// Brute-force resultant through the defining product, for polynomials whose
// roots we constructed: Res(p,q) = lc(p)^deg(q) * prod q(root_i).
Rat resultant_from_roots(const std::vector<Rat>& roots_of_p, const Rat& lc_p, const Poly& q) {
    Rat r = rat_pow(lc_p, q.degree());
    for (const auto& root : roots_of_p) r *= q.eval(root);
    return r;
}

Poly poly_from_roots(const std::vector<Rat>& roots, const Rat& lc) {
    Poly p = Poly::constant(lc);
    for (const auto& r : roots) {
        p = p * Poly(std::vector<Rat>{-r, Rat(1)});
    }
    return p;
}

// Sylvester determinant by exact Gaussian elimination over Q, an independent
// oracle for the subresultant implementation. Small degrees only.
Rat sylvester_resultant(const Poly& p, const Poly& q) {
    int dp = p.degree(), dq = q.degree();
    int n = dp + dq;
    if (n == 0) return Rat(1);
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (int row = 0; row < dq; ++row)
        for (int i = 0; i <= dp; ++i) m[row][row + dp - i] = p.coeff(i);
    for (int row = 0; row < dp; ++row)
        for (int i = 0; i <= dq; ++i) m[dq + row][row + dq - i] = q.coeff(i);
    Rat det(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rat inv = 1 / m[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] * inv;
            for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

RatMap fb(long b) {
    // (z^2 - 2bz + 1) / ((-2+2b) z)
    Poly num(std::vector<Rat>{Q(1), Q(-2 * b), Q(1)});
    Poly den(std::vector<Rat>{Q(0), Q(2 * b - 2)});
    return RatMap(num, den);
}

} // namespace

TEST_CASE("rationals are canonical") {
    CHECK(make_rat(Int(2), Int(-4)) == Q(-1, 2));
    CHECK(make_rat(Int(0), Int(7)) == Q(0));
    CHECK(make_rat(Int(0), Int(7)).get_den() == 1);
    CHECK(is_canonical(make_rat(Int(36), Int(-48))));
    CHECK_THROWS_AS(make_rat(Int(1), Int(0)), PreconditionError);
    CHECK(rat_from_string("-14/21") == Q(-2, 3));
}

TEST_CASE("poly eval") {
    Poly f = Poly::from_ints({-2, 0, 1}); // z^2 - 2
    CHECK(f.eval(Q(0)) == Q(-2));
    Poly p1 = Poly::from_ints({1, -4, 1}); // z^2 - 2*2*z + 1
    CHECK(p1.eval(Q(-1)) == Q(6));
    Poly g = Poly::from_ints({1, -3, 0, 1}); // z^3 - 3z + 1
    CHECK(g.eval(Q(3)) == Q(19));
    CHECK(g.eval(Q(1, 2)) == Q(-3, 8));
}

TEST_CASE("poly arithmetic and canonicality") {
    Poly a = Poly::from_ints({1, 2, 3});
    Poly b = Poly::from_ints({-1, -2, -3});
    CHECK((a + b).is_zero());
    CHECK((a + b).degree() == -1);
    Poly c = a * Poly::from_ints({0, 1});
    CHECK(c.degree() == 3);
    CHECK(c.coeff(0) == 0);
    for (const auto& co : c.coeffs()) CHECK(is_canonical(co));
}

TEST_CASE("derivative") {
    CHECK(Poly::from_ints({-2, 0, 1}).derivative() == Poly::from_ints({0, 2}));
    CHECK(Poly::from_ints({5}).derivative().is_zero());
    CHECK(Poly::from_ints({-7, 0, 7, 1}).derivative() == Poly::from_ints({0, 14, 3}));
}

TEST_CASE("divmod and gcd") {
    Poly a = Poly::from_ints({-1, 0, 1}); // (z-1)(z+1)
    Poly b = Poly::from_ints({-1, 1});
    auto [q, r] = poly_divmod(a, b);
    CHECK(r.is_zero());
    CHECK(q == Poly::from_ints({1, 1}));
    CHECK(poly_gcd(a, Poly::from_ints({-2, 2})) == Poly::from_ints({-1, 1}));
    Poly big = a * Poly::from_ints({7, 0, 0, 2});
    CHECK(poly_gcd(big, a) == a); // a is monic
}

TEST_CASE("resultant sign convention and examples") {
    // Res(z-2, z-3) = q(2) = -1
    CHECK(resultant(Poly::from_ints({-2, 1}), Poly::from_ints({-3, 1})) == Q(-1));
    // Res(p, 1) = 1
    CHECK(resultant(Poly::from_ints({4, 0, 0, 1}), Poly::from_ints({1})) == Q(1));
    // family: Res(Q1, P1) = 4(b-1)^2
    for (long b : {-7L, -2L, 0L, 2L, 3L, 5L, 12L}) {
        RatMap f = fb(b);
        CHECK(resultant(f.den, f.num) == Q(4 * (b - 1) * (b - 1)));
    }
}

TEST_CASE("resultant equals Sylvester determinant on random inputs") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<int> deg(1, 5);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Rat> pc, qc;
        int dp = deg(rng), dq = deg(rng);
        for (int i = 0; i <= dp; ++i) pc.push_back(Q(coeff(rng)));
        for (int i = 0; i <= dq; ++i) qc.push_back(Q(coeff(rng)));
        if (pc.back() == 0) pc.back() = Q(1);
        if (qc.back() == 0) qc.back() = Q(1);
        Poly p(pc), q(qc);
        CHECK(resultant(p, q) == sylvester_resultant(p, q));
    }
}

TEST_CASE("resultant multiplicativity Res(p, q*r) = Res(p,q) Res(p,r)") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long> coeff(-6, 6);
    std::uniform_int_distribution<int> deg(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        auto rand_poly = [&](int d) {
            std::vector<Rat> c;
            for (int i = 0; i <= d; ++i) c.push_back(Q(coeff(rng)));
            if (c.back() == 0) c.back() = Q(2);
            return Poly(c);
        };
        Poly p = rand_poly(deg(rng)), q = rand_poly(deg(rng)), r = rand_poly(deg(rng));
        CHECK(resultant(p, q * r) == resultant(p, q) * resultant(p, r));
    }
}

TEST_CASE("resultant via known roots") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> root(-5, 5);
    std::uniform_int_distribution<long> lcv(1, 4);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rat> roots;
        int k = 1 + static_cast<int>(trial % 4);
        for (int i = 0; i < k; ++i) roots.push_back(Q(root(rng)));
        Rat lc = Q(lcv(rng));
        Poly p = poly_from_roots(roots, lc);
        Poly q = Poly::from_ints({-3, 1, 2});
        CHECK(resultant(p, q) == resultant_from_roots(roots, lc, q));
    }
}

TEST_CASE("discriminant examples") {
    // Disc(z^2 - t) = 4t
    for (long t : {1L, 2L, 5L, -3L, 7L}) {
        Poly p(std::vector<Rat>{Q(-t), Q(0), Q(1)});
        CHECK(discriminant(p) == Q(4 * t));
    }
    CHECK(discriminant(Poly::from_ints({1, -3, 0, 1})) == Q(81));
    CHECK(discriminant(Poly::from_ints({-2, 0, 1})) == Q(8));
    CHECK(discriminant(Poly::from_ints({1, 0, 1})) == Q(-4));
    // family: Disc(P1) = 4(b^2-1)
    for (long b : {-5L, 0L, 2L, 4L, 9L}) {
        Poly p1(std::vector<Rat>{Q(1), Q(-2 * b), Q(1)});
        CHECK(discriminant(p1) == Q(4 * (b * b - 1)));
    }
    CHECK_THROWS_AS(discriminant(Poly::from_ints({3})), PreconditionError);
}

TEST_CASE("discriminant agrees with root-difference product") {
    // Disc = lc^(2d-2) * prod_{i<j} (r_i - r_j)^2 for split polynomials
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> root(-6, 6);
    for (int trial = 0; trial < 30; ++trial) {
        int k = 2 + trial % 3;
        std::vector<Rat> roots;
        for (int i = 0; i < k; ++i) roots.push_back(Q(root(rng), 1 + trial % 2));
        bool dup = false;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (roots[i] == roots[j]) dup = true;
        if (dup) continue;
        Rat lc = Q(2);
        Poly p = poly_from_roots(roots, lc);
        Rat expect = rat_pow(lc, 2 * k - 2);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                Rat d = roots[i] - roots[j];
                expect *= d * d;
            }
        CHECK(discriminant(p) == expect);
    }
}

TEST_CASE("compose") {
    auto [a0, b0] = compose(Poly::from_ints({0, 0, 1}), Poly::variable(), Poly::from_ints({1}));
    CHECK(a0 == Poly::from_ints({0, 0, 1}));
    CHECK(b0 == Poly::from_ints({1}));
    auto [a1, b1] = compose(Poly::from_ints({-2, 0, 1}), Poly::from_ints({-2, 0, 1}), Poly::from_ints({1}));
    CHECK(a1 == Poly::from_ints({2, 0, -4, 0, 1}));
    CHECK(b1 == Poly::from_ints({1}));
}

TEST_CASE("iterate of a quadratic polynomial") {
    RatMap f(Poly::from_ints({-2, 0, 1}), Poly::from_ints({1}));
    auto it1 = iterate(f, 1);
    CHECK(it1.P == f.num);
    CHECK(it1.Q == f.den);
    auto it2 = iterate(f, 2);
    CHECK(it2.P == Poly::from_ints({2, 0, -4, 0, 1}));
    CHECK(it2.Q == Poly::from_ints({1}));
}

TEST_CASE("family iterate pair matches the scalar recursion") {
    RatMap f = fb(2);
    auto it2 = iterate(f, 2);
    CHECK(it2.P.eval(Q(-1)) == Q(88));
    CHECK(it2.Q.eval(Q(-1)) == Q(-24));
    for (long b : {0L, 2L, 3L, -4L}) {
        RatMap g = fb(b);
        auto i1 = iterate(g, 1);
        auto i2 = iterate(g, 2);
        CHECK(i2.Q == Q(2 * (b - 1)) * (i1.P * i1.Q));
    }
    auto scal = iterate_scalar_pair(f, Q(-1), 3);
    CHECK(scal[0] == std::pair<Rat, Rat>(Q(6), Q(-2)));
    CHECK(scal[1] == std::pair<Rat, Rat>(Q(88), Q(-24)));
    auto it3 = iterate(f, 3);
    CHECK(it3.P.eval(Q(-1)) == scal[2].first);
    CHECK(it3.Q.eval(Q(-1)) == scal[2].second);
}

TEST_CASE("composition law iterate(f, m+n) == iterate(f,m) o iterate(f,n)") {
    std::vector<RatMap> maps;
    maps.push_back(fb(2));
    maps.push_back(RatMap(Poly::from_ints({1, 0, 1}), Poly::from_ints({1})));
    maps.push_back(RatMap(Poly::from_ints({1, 0, 1}), Poly::variable())); // (z^2+1)/z
    for (const auto& f : maps) {
        int d = f.degree();
        for (int m = 1; m <= 2; ++m)
            for (int n = 1; m + n <= 5; ++n) {
                auto im = iterate(f, m);
                auto in = iterate(f, n);
                auto itotal = iterate(f, m + n);
                int dm = 1;
                for (int i = 0; i < m; ++i) dm *= d;
                Poly P = homog_compose(im.P, dm, in.P, in.Q);
                Poly Q = homog_compose(im.Q, dm, in.P, in.Q);
                CHECK(P == itotal.P);
                CHECK(Q == itotal.Q);
            }
    }
}

TEST_CASE("degree cap enforced") {
    RatMap f(Poly::from_ints({1, 0, 1}), Poly::from_ints({1}));
    IterateConfig cfg;
    cfg.degree_cap = 16;
    CHECK_THROWS_AS(iterate(f, 5, cfg), ResourceCapExceeded);
    CHECK_NOTHROW(iterate(f, 4, cfg));
}

TEST_CASE("wronskian") {
    for (long b : {0L, 2L, 5L, -3L}) {
        RatMap f = fb(b);
        Poly c = wronskian(f);
        Poly expect = Q(2 * b - 2) * Poly::from_ints({-1, 0, 1});
        CHECK(c == expect);
        CHECK(c.leading() == Q(2 * (b - 1)));
    }
    RatMap g(Poly::from_ints({-2, 0, 1}), Poly::from_ints({1}));
    CHECK(wronskian(g) == Poly::from_ints({0, 2}));
    RatMap h(Poly::from_ints({1, 0, 1}), Poly::variable());
    CHECK(wronskian(h) == Poly::from_ints({-1, 0, 1}));
}

TEST_CASE("ratmap normalization") {
    RatMap f(Poly::from_ints({0, 0, 2}), Poly::from_ints({0, 4}));
    CHECK(f.is_polynomial());
    CHECK(f.num == Poly(std::vector<Rat>{Q(0), Q(1, 2)}));
    CHECK_THROWS_AS(RatMap(Poly::variable(), Poly::zero()), PreconditionError);
}

TEST_CASE("apply on P^1") {
    RatMap f = fb(2);
    CHECK(apply(f, ProjQ(Q(0))) == ProjQ::infinity());
    CHECK(apply(f, ProjQ::infinity()) == ProjQ::infinity());
    CHECK(apply(f, ProjQ(Q(1))) == ProjQ(Q(-1)));
    RatMap g(Poly::from_ints({-1, 0, 1}), Poly::variable()); // (z^2-1)/z
    CHECK(apply(g, ProjQ(Q(1))) == ProjQ(Q(0)));
    CHECK(apply(g, ProjQ(Q(0))) == ProjQ::infinity());
}
