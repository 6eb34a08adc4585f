#include "dgv/rational.hpp"

#include <doctest.h>

using namespace dgv;

TEST_CASE("polynomial arithmetic and evaluation") {
    Poly x = Poly::var(0), y = Poly::var(1), t = Poly::var(2);
    Poly p = x * y + Poly::constant(2) * t - Poly::constant(1);
    CHECK(p.eval(Rat(1, 2), Rat(1, 3), Rat(1, 4)) == Rat(1, 2) * Rat(1, 3) + Rat(1, 2) - 1);
    CHECK((p - p).is_zero());
    CHECK((x * y) == (y * x));
}

TEST_CASE("formula parser handles the catalog idioms") {
    // implicit products, unary minus, powers, one division level
    RatFun f = parse_ratfun("4x/(2-t)");
    CHECK(f.eval(Rat(1, 2), 0, 0) == Rat(1));
    RatFun g = parse_ratfun("((2+t)x+(2-t)y)/(2-t)");
    CHECK(g.eval(Rat(1, 4), Rat(1, 4), Rat(2, 3)) ==
          (Rat(8, 3) * Rat(1, 4) + Rat(4, 3) * Rat(1, 4)) / Rat(4, 3));
    Poly b = parse_poly("xy+(1-x)(1-y)+(1-x)y+x(1-y)");
    CHECK(b == Poly::constant(1));  // the eta barycentric identity
    Poly h = parse_poly("t^2+t(4x-3)-2(x+y-1)");
    CHECK(h.eval(1, 1, 1) == Rat(1) + 1 - 2);
    CHECK_THROWS(parse_ratfun("x+"));
    CHECK_THROWS(parse_poly("x/(1-y)"));
}

TEST_CASE("parser rejects nested division") { CHECK_THROWS(parse_ratfun("x/(y/(1-t))")); }
