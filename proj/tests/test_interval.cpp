#include <catch2/catch_amalgamated.hpp>

#include <mpfr.h>

#include <random>

#include "farey/interval.hpp"

using farey::Interval;
using farey::Rational;

namespace {

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    return Rational(num(rng), (unsigned long)den(rng));
}

} // namespace

TEST_CASE("rational conversion is outward and tight", "[interval]") {
    // dyadic: exactly representable, zero width
    Interval half = Interval::from_rational(Rational(1, 2), 128);
    CHECK(half.width_upper() == 0.0);
    CHECK(half.contains(Rational(1, 2)));

    // non-dyadic must strictly bracket
    Interval third = Interval::from_rational(Rational(1, 3), 128);
    CHECK(third.contains(Rational(1, 3)));
    CHECK(mpfr_cmp_q(third.lo_raw(), Rational(1, 3).raw()) < 0);
    CHECK(mpfr_cmp_q(third.hi_raw(), Rational(1, 3).raw()) > 0);

    Interval x = Interval::from_rational(Rational(5, 18), 128);
    CHECK(x.contains(Rational(5, 18)));
    CHECK(x.width_upper() <= 1e-38);
}

TEST_CASE("conversion width honours 2^(1-p) * max(1, |r|)", "[interval]") {
    std::mt19937 rng(12345);
    for (int i = 0; i < 200; ++i) {
        Rational r = random_rational(rng);
        for (mpfr_prec_t p : {64l, 128l, 256l}) {
            Interval iv = Interval::from_rational(r, p);
            REQUIRE(iv.contains(r));
            // width <= 2^(1-p) * max(1, |r|), checked in mpfr to avoid
            // double underflow
            mpfr_t w, cap;
            mpfr_init2(w, p);
            mpfr_init2(cap, p + 64);
            mpfr_sub(w, iv.hi_raw(), iv.lo_raw(), MPFR_RNDU);
            mpfr_set_q(cap, r.abs().raw(), MPFR_RNDU);
            if (mpfr_cmp_ui(cap, 1) < 0) mpfr_set_ui(cap, 1, MPFR_RNDU);
            mpfr_mul_2si(cap, cap, 1 - p, MPFR_RNDU);
            CHECK(mpfr_cmp(w, cap) <= 0);
            mpfr_clear(w);
            mpfr_clear(cap);
        }
    }
}

TEST_CASE("containment soundness under the four operations", "[interval]") {
    std::mt19937 rng(987654321);
    for (int i = 0; i < 400; ++i) {
        Rational x = random_rational(rng);
        Rational y = random_rational(rng);
        Interval X = Interval::from_rational(x, 128);
        Interval Y = Interval::from_rational(y, 128);
        CHECK((X + Y).contains(x + y));
        CHECK((X - Y).contains(x - y));
        CHECK((X * Y).contains(x * y));
        if (!y.is_zero() && !Y.contains_zero()) CHECK((X / Y).contains(x / y));
        CHECK(sqr(X).contains(x * x));
        CHECK(abs(X).contains(x.abs()));
        CHECK((-X).contains(-x));
        CHECK(X.scaled(-7).contains(x * Rational(-7)));
    }
}

TEST_CASE("division by an interval containing zero throws", "[interval]") {
    Interval num = Interval::from_integer(1, 128);
    Interval den = Interval::hull_of_rationals(Rational(-1), Rational(1), 128);
    CHECK_THROWS_AS(num / den, std::domain_error);
}

TEST_CASE("square of a zero-spanning interval starts at zero", "[interval]") {
    Interval x = Interval::hull_of_rationals(Rational(-2), Rational(3), 128);
    Interval s = sqr(x);
    CHECK(s.contains(Rational(0)));
    CHECK(s.contains(Rational(9)));
    CHECK(s.contains(Rational(4)));
    CHECK_FALSE(s.contains(Rational(-1, 100)));
    CHECK_FALSE(s.contains(Rational(91, 10)));
}

TEST_CASE("log enclosures", "[interval]") {
    Interval one = Interval::from_integer(1, 128);
    Interval l1 = log(one);
    CHECK(l1.contains(Rational(0)));
    CHECK(l1.width_upper() <= 1e-37);

    // enclosure of e maps to an enclosure of 1
    Interval e = Interval::from_decimal_bounds(
        "2.71828182845904523536028747135266249775",
        "2.71828182845904523536028747135266249776", 128);
    CHECK(log(e).contains(Rational(1)));

    // log 374 against an independent higher-precision evaluation
    Interval l374 = log(Interval::from_uinteger(374, 128));
    mpfr_t ref;
    mpfr_init2(ref, 300);
    mpfr_set_ui(ref, 374, MPFR_RNDN);
    mpfr_log(ref, ref, MPFR_RNDN);
    CHECK(mpfr_cmp(l374.lo_raw(), ref) <= 0);
    CHECK(mpfr_cmp(l374.hi_raw(), ref) >= 0);
    mpfr_clear(ref);
    // first digits 5.924255797...
    CHECK(Interval::from_decimal_bounds("5.924255797", "5.924255798", 128)
              .contains(l374));

    CHECK_THROWS_AS(log(Interval::from_integer(0, 128)), std::domain_error);
    CHECK_THROWS_AS(log(Interval::from_integer(-3, 128)), std::domain_error);
}

TEST_CASE("certified comparisons need separated enclosures", "[interval]") {
    Interval a = Interval::from_rational(Rational(1, 3), 128);
    Interval b = Interval::from_rational(Rational(1, 2), 128);
    CHECK(a.certainly_less(b));
    CHECK(a.certainly_at_most(b));
    CHECK_FALSE(b.certainly_less(b));
    CHECK(a.certainly_less(Rational(1, 2)));
    CHECK(b.certainly_greater(Rational(1, 3)));
    CHECK_FALSE(a.certainly_less(Rational(1, 3)));

    Interval wide = Interval::hull_of_rationals(Rational(0), Rational(1), 128);
    CHECK_FALSE(wide.certainly_less(Rational(1, 2)));
    CHECK_FALSE(wide.certainly_greater(Rational(1, 2)));
}

TEST_CASE("plus_minus pads symmetrically", "[interval]") {
    Interval m = Interval::from_rational(Rational(3, 7), 128);
    Interval p = plus_minus(m);
    CHECK(p.contains(Rational(3, 7)));
    CHECK(p.contains(Rational(-3, 7)));
    CHECK(p.contains(Rational(0)));
}

TEST_CASE("doubling precision refines enclosures", "[interval]") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        Rational r = random_rational(rng);
        Interval lo_p = Interval::from_rational(r, 128);
        Interval hi_p = Interval::from_rational(r, 256);
        CHECK(lo_p.contains(hi_p));
        CHECK(hi_p.width_upper() <= lo_p.width_upper());
    }
}
