#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arbor/error.hpp"
#include "arbor/parser.hpp"

using namespace arbor;

namespace {
Rat Q(long n, long d = 1) { return make_rat(Int(n), Int(d)); }
}

TEST_CASE("polynomial inputs yield den = 1") {
    RatMap f = parse_map("z^2 - 2");
    CHECK(f.is_polynomial());
    CHECK(f.num == Poly::from_ints({-2, 0, 1}));
    CHECK(f.degree() == 2);

    RatMap id = parse_map("z");
    CHECK(id.degree() == 1);
    CHECK(id.num == Poly::variable());
}

TEST_CASE("family member at b=2") {
    RatMap f = parse_map("(z^2-4z+1)/(2z)");
    CHECK(f.num == Poly::from_ints({1, -4, 1}));
    CHECK(f.den == Poly::from_ints({0, 2}));
    CHECK(f.degree() == 2);
}

TEST_CASE("precedence and associativity") {
    CHECK(parse_map("z^2^3").num.degree() == 8); // right-associative
    CHECK(parse_map("-z^2").num == Poly::from_ints({0, 0, -1}));
    CHECK(parse_map("2z^3").num == Poly::from_ints({0, 0, 0, 2}));
    CHECK(parse_map("1/2z").num == Poly(std::vector<Rat>{Q(0), Q(1, 2)})); // (1/2)*z
    CHECK(parse_map("z - 2 * z").num == Poly::from_ints({0, -1}));
    CHECK(parse_map("(z-1)(z+1)").num == Poly::from_ints({-1, 0, 1}));
    CHECK(parse_map("z(z+1)").num == Poly::from_ints({0, 1, 1}));
    CHECK(parse_map("3/4").num == Poly(std::vector<Rat>{Q(3, 4)}));
}

TEST_CASE("rational functions reduce to lowest terms") {
    RatMap f = parse_map("(z^2-1)/(z-1)");
    CHECK(f.is_polynomial());
    CHECK(f.num == Poly::from_ints({1, 1}));

    RatMap g = parse_map("(z^3+z)/(z^2+1)");
    CHECK(g.is_polynomial());
    CHECK(g.num == Poly::variable());

    RatMap h = parse_map("1/z + z");
    CHECK(h.num == Poly::from_ints({1, 0, 1}));
    CHECK(h.den == Poly::variable());
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse_map("y + 1"), ParseError);
    CHECK_THROWS_AS(parse_map("z^-2"), ParseError);
    CHECK_THROWS_AS(parse_map("z/(z-z)"), ParseError);
    CHECK_THROWS_AS(parse_map("(z"), ParseError);
    CHECK_THROWS_AS(parse_map("z)"), ParseError);
    CHECK_THROWS_AS(parse_map(""), ParseError);
    CHECK_THROWS_AS(parse_map("z2"), ParseError);
    try {
        parse_map("z^2 + w");
    } catch (const ParseError& e) {
        CHECK(e.position == 6);
    }
}

TEST_CASE("round trip through to_string") {
    for (const char* text : {"z^2 - 2", "(z^2-4z+1)/(2z)", "z^3+7z^2-7", "(z^2+1)/z"}) {
        RatMap f = parse_map(text);
        RatMap g = parse_map(f.to_string());
        CHECK(f.num == g.num);
        CHECK(f.den == g.den);
    }
}
