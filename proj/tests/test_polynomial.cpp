#include <doctest.h>

#include <cmath>

#include "lieham/polynomial.hpp"
#include "lieham/space.hpp"

using namespace lieham;

namespace {
const std::vector<std::string> xyz = {"x", "y", "z"};
}

TEST_CASE("polynomial arithmetic and zero-term pruning") {
    Polynomial x = Polynomial::variable(3, 0);
    Polynomial y = Polynomial::variable(3, 1);
    Polynomial p = x * x - y;
    CHECK(p.terms().size() == 2);
    Polynomial q = p - p;
    CHECK(q.is_zero());
    CHECK((x * y).total_degree() == 2);
    CHECK(Polynomial::variable(3, 2, -2).total_degree() == 2);  // Laurent degree counts |exp|
}

TEST_CASE("polynomial parsing round trip") {
    Polynomial p = parse_polynomial("x^2*y - 3/2*z", xyz);
    CHECK(p.str(xyz) == "x^2*y - 3/2*z");
    CHECK(parse_polynomial("-x + x", xyz).is_zero());
    CHECK(parse_polynomial("(x + y)^2", xyz) ==
          parse_polynomial("x^2 + 2*x*y + y^2", xyz));
    CHECK(parse_polynomial("2x", xyz) == parse_polynomial("2*x", xyz));
    CHECK(parse_polynomial("x^-1", xyz) == Polynomial::variable(3, 0, -1));
    CHECK_THROWS(parse_polynomial("w + 1", xyz));
    CHECK_THROWS(parse_polynomial("x +", xyz));
}

TEST_CASE("partial derivative with Laurent exponents") {
    Polynomial p = parse_polynomial("x^-2*y", xyz);
    Polynomial expect = parse_polynomial("-2*x^-3*y", xyz);
    CHECK(p.partial(0) == expect);
    CHECK(p.partial(2).is_zero());
}

TEST_CASE("evaluation") {
    Polynomial p = parse_polynomial("x^2*y - 3/2*z", xyz);
    CHECK(p.eval({2.0, 3.0, 4.0}) == doctest::Approx(12.0 - 6.0));
    Polynomial laurent = parse_polynomial("x^-1", xyz);
    CHECK(laurent.eval({4.0, 0.0, 0.0}) == doctest::Approx(0.25));
}

TEST_CASE("space: exp symbol chain rule") {
    Space sp = Space::coords({"x", "y"});
    int u = sp.add_exp(0, "u");
    // d/dx (u^2) = 2 u^2
    Polynomial p = sp.sym(u, 2);
    CHECK(sp.d_coord(p, 0) == Rational(2) * p);
    // d/dx (x*u) = u + x*u
    Polynomial q = sp.mul(sp.sym(0), sp.sym(u));
    CHECK(sp.d_coord(q, 0) == sp.sym(u) + q);
    // negative powers: d/dx u^-1 = -u^-1
    CHECK(sp.d_coord(sp.sym(u, -1), 0) == Rational(-1) * sp.sym(u, -1));
}

TEST_CASE("space: trig pair with sin^2 reduction") {
    Space sp = Space::coords({"t"});
    int c = sp.add_trig(0, "C", "S");
    int s = c + 1;
    // d/dt C = -S, d/dt S = C
    CHECK(sp.d_coord(sp.sym(c), 0) == Rational(-1) * sp.sym(s));
    CHECK(sp.d_coord(sp.sym(s), 0) == sp.sym(c));
    // C^2 + S^2 reduces to 1
    Polynomial pyth = sp.mul(sp.sym(c), sp.sym(c)) + sp.mul(sp.sym(s), sp.sym(s));
    CHECK(pyth == sp.one());
    // evaluation matches cos/sin
    Polynomial mix = sp.mul(sp.sym(c), sp.sym(s));
    CHECK(sp.eval(mix, {0.7}) == doctest::Approx(std::cos(0.7) * std::sin(0.7)));
}

TEST_CASE("space: degree cap enforcement") {
    Space sp({"x"}, 4);
    Polynomial x3 = sp.sym(0, 3);
    CHECK_THROWS_AS(sp.mul(x3, x3), std::length_error);
}
