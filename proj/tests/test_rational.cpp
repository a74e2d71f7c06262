#include <catch2/catch_amalgamated.hpp>

#include "farey/rational.hpp"

using farey::Rational;

TEST_CASE("construction is always canonical", "[rational]") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-6, 4) == Rational(-3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational("-4/6") == Rational(-2, 3));
    CHECK(Rational("4/-6") == Rational(-2, 3)); // denominator sign normalized
    CHECK(Rational("12") == Rational(12));
    CHECK(Rational(5, 18).num_string() == "5");
    CHECK(Rational(5, 18).den_string() == "18");
    CHECK(Rational(10, 36).to_string() == "5/18");
}

TEST_CASE("bad input is rejected", "[rational]") {
    CHECK_THROWS_AS(Rational(1, 0ul), std::domain_error);
    CHECK_THROWS_AS(Rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("field arithmetic", "[rational]") {
    Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(-a == Rational(-1, 2));
    CHECK((a - b - a + b).is_zero());
    CHECK(Rational(-3, 4).abs() == Rational(3, 4));
    CHECK(Rational(-3, 4).squared() == Rational(9, 16));
    CHECK(Rational(-3, 4).sign() == -1);
    CHECK(Rational(0).sign() == 0);
}

TEST_CASE("ordering", "[rational]") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 5) >= Rational(7, 5));
    CHECK(Rational(2, 6) <= Rational(1, 3));
}

TEST_CASE("inv_pow", "[rational]") {
    CHECK(Rational::inv_pow(2, 2) == Rational(1, 4));
    CHECK(Rational::inv_pow(3, 4) == Rational(1, 81));
    CHECK(Rational::inv_pow(10, 0) == Rational(1));
    CHECK_THROWS_AS(Rational::inv_pow(0, 2), std::domain_error);
}

TEST_CASE("results stay reduced through long accumulations", "[rational]") {
    // harmonic-style sum then the same backwards; denominators shrink back
    Rational sum;
    for (unsigned long n = 1; n <= 200; ++n) sum += Rational::inv_pow(n, 1);
    Rational back = sum;
    for (unsigned long n = 1; n <= 199; ++n) back -= Rational::inv_pow(n, 1);
    CHECK(back == Rational::inv_pow(200, 1));
    CHECK(back.den_string() == "200");
}
