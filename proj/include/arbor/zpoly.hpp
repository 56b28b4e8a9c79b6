#pragma once

#include "arbor/rational.hpp"

#include <vector>

namespace arbor {

// Dense polynomial over Z, index = exponent, trailing entry nonzero.
// The empty vector is the zero polynomial. This layer exists so that the
// heavy algorithms (resultants, gcd, Hensel lifting) run on integers;
// the rational Poly type clears denominators down to here.
using ZPoly = std::vector<Int>;

void zp_trim(ZPoly& a);
int zp_deg(const ZPoly& a); // -1 for zero

ZPoly zp_add(const ZPoly& a, const ZPoly& b);
ZPoly zp_sub(const ZPoly& a, const ZPoly& b);
ZPoly zp_neg(ZPoly a);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b);
ZPoly zp_scale(const ZPoly& a, const Int& c);
ZPoly zp_derivative(const ZPoly& a);

/// Content (gcd of coefficients, always >= 0; content of 0 is 0).
Int zp_content(const ZPoly& a);
/// a / content(a), sign preserved. Zero stays zero.
ZPoly zp_primitive(const ZPoly& a);
/// Divide every coefficient by d; requires exact divisibility.
ZPoly zp_divexact_scalar(const ZPoly& a, const Int& d);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r, deg r < deg b.
ZPoly zp_pseudo_rem(const ZPoly& a, const ZPoly& b);

/// True division test: does b divide a exactly over Z?
/// On success (return true) *q holds the quotient.
bool zp_divides(const ZPoly& a, const ZPoly& b, ZPoly* q);

/// Resultant over Z by the subresultant PRS. Sign convention:
/// Res(a,b) = lc(a)^deg(b) * prod b(alpha) over the roots alpha of a,
/// i.e. the Sylvester determinant.
Int zp_resultant(ZPoly a, ZPoly b);

/// Primitive gcd over Z (positive leading coefficient).
ZPoly zp_gcd(ZPoly a, ZPoly b);

/// Evaluate at a rational u/v: returns a(u/v) * v^deg(a) as an integer pair
/// decomposition is not needed; this gives the exact rational value.
Rat zp_eval(const ZPoly& a, const Rat& x);

std::string zp_to_string(const ZPoly& a);

} // namespace arbor
