#include <doctest.h>

#include "lieham/rational.hpp"

using lieham::RatMatrix;
using lieham::Rational;

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
    CHECK((Rational(1) / Rational(1, 7)) == Rational(7));
    CHECK(Rational(0, 5).is_zero());
    CHECK(Rational(3, 3).is_one());
    CHECK(Rational(-5).sign() == -1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational parsing and printing") {
    CHECK(Rational::from_string("3/4") == Rational(3, 4));
    CHECK(Rational::from_string("-7") == Rational(-7));
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(-8, 2).str() == "-4");
    CHECK_THROWS(Rational::from_string("x"));
}

TEST_CASE("rational overflow detection") {
    Rational big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("exact linear solve") {
    RatMatrix A = {{Rational(2), Rational(1)}, {Rational(1), Rational(3)}, {Rational(3), Rational(4)}};
    std::vector<Rational> b = {Rational(5), Rational(10), Rational(15)};
    std::vector<Rational> x;
    REQUIRE(lieham::solve_exact(A, b, x));
    CHECK(x[0] == Rational(1));
    CHECK(x[1] == Rational(3));

    // inconsistent system reports the bad row
    b[2] = Rational(0);
    std::size_t bad = 99;
    CHECK_FALSE(lieham::solve_exact(A, b, x, &bad));
    CHECK(bad == 2);
}
