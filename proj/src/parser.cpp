#include "arbor/parser.hpp"
#include "arbor/error.hpp"

#include <cctype>

namespace arbor {

namespace {

// Rational-function value moved through the recursive-descent parser.
struct RF {
    Poly num;
    Poly den; // never zero

    static RF from_poly(Poly p) { return RF{std::move(p), Poly::constant(Rat(1))}; }

    void reduce() {
        if (num.is_zero()) {
            den = Poly::constant(Rat(1));
            return;
        }
        Poly g = poly_gcd(num, den);
        if (g.degree() > 0) {
            num = poly_divexact(num, g);
            den = poly_divexact(den, g);
        }
    }
};

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    RF parse_expr() {
        RF lhs = parse_term();
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                RF rhs = parse_term();
                // a/b +- c/d = (ad +- cb) / bd
                Poly n = lhs.num * rhs.den;
                Poly m = rhs.num * lhs.den;
                lhs.num = (c == '+') ? n + m : n - m;
                lhs.den = lhs.den * rhs.den;
                lhs.reduce();
            } else {
                return lhs;
            }
        }
    }

    RF parse_term() {
        RF lhs = parse_unary();
        while (true) {
            char c = peek();
            if (c == '*' || c == '/') {
                ++pos;
                RF rhs = parse_unary();
                apply_mul_div(lhs, rhs, c == '/');
            } else if (c == 'z' || c == '(') {
                // juxtaposition: "2z", "4z^2", "z(z+1)", ")("
                RF rhs = parse_unary();
                apply_mul_div(lhs, rhs, false);
            } else {
                return lhs;
            }
        }
    }

    void apply_mul_div(RF& lhs, RF& rhs, bool divide) {
        if (divide) {
            if (rhs.num.is_zero()) fail("division by zero");
            std::swap(rhs.num, rhs.den);
        }
        lhs.num = lhs.num * rhs.num;
        lhs.den = lhs.den * rhs.den;
        lhs.reduce();
    }

    RF parse_unary() {
        char c = peek();
        if (c == '-') {
            ++pos;
            RF v = parse_unary();
            v.num = -v.num;
            return v;
        }
        if (c == '+') {
            ++pos;
            return parse_unary();
        }
        return parse_power();
    }

    RF parse_power() {
        RF base = parse_primary();
        if (peek() == '^') {
            ++pos;
            unsigned long e = parse_exponent();
            RF r = RF::from_poly(base.num.pow(static_cast<unsigned>(e)));
            r.den = base.den.pow(static_cast<unsigned>(e));
            return r;
        }
        return base;
    }

    unsigned long parse_exponent() {
        skip_ws();
        bool paren = false;
        if (pos < s.size() && s[pos] == '(') {
            paren = true;
            ++pos;
            skip_ws();
        }
        if (pos < s.size() && s[pos] == '-') fail("negative exponent not allowed");
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected nonnegative integer exponent");
        // right-associative power tower: 2^3^2 = 2^(3^2); exponent itself may be e^(e2)
        unsigned long e = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            e = e * 10 + static_cast<unsigned long>(s[pos] - '0');
            if (e > 1u << 20) fail("exponent too large");
            ++pos;
        }
        if (peek() == '^') {
            ++pos;
            unsigned long e2 = parse_exponent();
            unsigned long r = 1;
            for (unsigned long i = 0; i < e2; ++i) {
                r *= e;
                if (r > 1u << 20) fail("exponent too large");
            }
            e = r;
        }
        if (paren) {
            if (peek() != ')') fail("expected ')' after exponent");
            ++pos;
        }
        return e;
    }

    RF parse_primary() {
        char c = peek();
        if (c == '(') {
            ++pos;
            RF v = parse_expr();
            if (peek() != ')') fail("expected ')'");
            ++pos;
            return v;
        }
        if (c == 'z') {
            ++pos;
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                fail("unexpected digit after variable z");
            return RF::from_poly(Poly::variable());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int n = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                n = n * 10 + (s[pos] - '0');
                ++pos;
            }
            return RF::from_poly(Poly::constant(Rat(n)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) fail("only the variable z is allowed");
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

RatMap parse_map(const std::string& text) {
    Parser p(text);
    RF v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    if (v.den.is_zero()) p.fail("zero denominator");
    if (v.num.is_zero() && v.den.is_zero()) p.fail("0/0 indeterminate");
    return RatMap(std::move(v.num), std::move(v.den));
}

} // namespace arbor
