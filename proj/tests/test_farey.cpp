#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

#include "farey/farey.hpp"

using farey::FareyFraction;
using farey::FareyIterator;
using farey::HalfOpenInterval;
using farey::Rational;

namespace {

std::vector<FareyFraction> collect(uint64_t Q) {
    std::vector<FareyFraction> v;
    for (FareyIterator it(Q); !it.done(); it.advance()) v.push_back(it.value());
    return v;
}

// every reduced fraction with den <= Q, sorted; the brute-force reference
std::vector<FareyFraction> brute_force(uint64_t Q) {
    std::vector<FareyFraction> v{{0, 1}};
    for (uint64_t den = 1; den <= Q; ++den)
        for (uint64_t num = 1; num <= den; ++num)
            if (std::gcd(num, den) == 1) v.push_back({num, den});
    std::sort(v.begin(), v.end(),
              [](const FareyFraction& a, const FareyFraction& b) { return a < b; });
    return v;
}

} // namespace

TEST_CASE("explicit small sequences", "[farey]") {
    CHECK(collect(1) == std::vector<FareyFraction>{{0, 1}, {1, 1}});
    CHECK(collect(3) == std::vector<FareyFraction>{{0, 1}, {1, 3}, {1, 2}, {2, 3}, {1, 1}});
    // after (0/1, 1/5) the recurrence gives k = 1 and 1/4
    auto f5 = collect(5);
    REQUIRE(f5.size() >= 3);
    CHECK(f5[1] == FareyFraction{1, 5});
    CHECK(f5[2] == FareyFraction{1, 4});
}

TEST_CASE("stream equals sorted brute force up to order 100", "[farey]") {
    for (uint64_t Q = 1; Q <= 100; ++Q) REQUIRE(collect(Q) == brute_force(Q));
}

TEST_CASE("per-step unimodularity, gap identity, consecutiveness", "[farey]") {
    for (uint64_t Q : {2ull, 7ull, 50ull, 101ull, 499ull}) {
        FareyIterator it(Q);
        FareyFraction prev = it.value();
        for (it.advance(); !it.done(); it.advance()) {
            FareyFraction cur = it.value();
            REQUIRE(cur.num * prev.den - prev.num * cur.den == 1);
            REQUIRE(prev.den + cur.den > Q);
            REQUIRE(std::gcd(prev.den, cur.den) == 1);
            // gap identity: cur - prev = 1/(den * den) as exact rationals
            REQUIRE(cur.to_rational() - prev.to_rational() ==
                    Rational::from_uint_ratio(1, prev.den * cur.den));
            prev = cur;
        }
        REQUIRE(prev == FareyFraction{1, 1});
    }
}

TEST_CASE("neighbor pairs", "[farey]") {
    using P = std::pair<uint64_t, uint64_t>;
    auto pairs = [](uint64_t Q) {
        std::vector<P> v;
        for (farey::NeighborPairStream s(Q); !s.done(); s.advance())
            v.push_back(s.value());
        return v;
    };
    CHECK(pairs(2) == std::vector<P>{{1, 2}, {2, 1}});
    CHECK(pairs(3) == std::vector<P>{{1, 3}, {3, 2}, {2, 3}, {3, 1}});

    // multiset equals the coprime lattice region q + q' > Q, each once
    for (uint64_t Q : {2ull, 3ull, 17ull, 60ull, 150ull, 300ull}) {
        std::vector<P> got = pairs(Q);
        std::vector<P> want;
        for (uint64_t q = 1; q <= Q; ++q)
            for (uint64_t qp = Q - q + 1; qp <= Q; ++qp)
                if (std::gcd(q, qp) == 1) want.push_back({q, qp});
        REQUIRE(got.size() == want.size());
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        REQUIRE(got == want);
    }
}

TEST_CASE("farey_bracket locates consecutive pairs", "[farey]") {
    auto check = [](uint64_t Q, const Rational& x, FareyFraction l, FareyFraction r) {
        auto [L, R] = farey::farey_bracket(Q, x);
        CHECK(L == l);
        CHECK(R == r);
    };
    check(5, Rational(0), {0, 1}, {1, 5});
    check(5, Rational(1, 3), {1, 3}, {2, 5});       // exact member: L == x
    check(5, Rational(49, 100), {2, 5}, {1, 2});
    check(1, Rational(0), {0, 1}, {1, 1});
    check(7, Rational(999, 1000), {6, 7}, {1, 1});

    // property: L <= x < R, unimodular, both in F_Q, consecutive
    for (uint64_t Q : {3ull, 10ull, 97ull}) {
        for (long num = 0; num < 50; ++num) {
            Rational x(num, 50ul);
            if (x >= Rational(1)) continue;
            auto [L, R] = farey::farey_bracket(Q, x);
            REQUIRE(L.to_rational() <= x);
            REQUIRE(x < R.to_rational());
            REQUIRE(R.num * L.den - L.num * R.den == 1);
            REQUIRE(L.den + R.den > Q);
        }
    }
    CHECK_THROWS_AS(farey::farey_bracket(5, Rational(1)), std::domain_error);
    CHECK_THROWS_AS(farey::farey_bracket(5, Rational(-1, 2)), std::domain_error);
}

TEST_CASE("interval streams match filtered enumeration", "[farey]") {
    auto stream = [](uint64_t Q, const HalfOpenInterval& I) {
        std::vector<FareyFraction> v;
        for (farey::FareyIntervalStream s(Q, I); !s.done(); s.advance())
            v.push_back(s.value());
        return v;
    };

    // spec'd listings
    CHECK(stream(3, HalfOpenInterval(Rational(0), Rational(1))) ==
          std::vector<FareyFraction>{{1, 3}, {1, 2}, {2, 3}, {1, 1}});
    CHECK(stream(4, HalfOpenInterval(Rational(1, 3), Rational(2, 3))) ==
          std::vector<FareyFraction>{{1, 2}, {2, 3}});
    CHECK(stream(5, HalfOpenInterval(Rational(0), Rational(1, 2))) ==
          std::vector<FareyFraction>{{1, 5}, {1, 4}, {1, 3}, {2, 5}, {1, 2}});

    // against filtering the full stream, various cut points
    const std::vector<HalfOpenInterval> intervals = {
        HalfOpenInterval(Rational(0), Rational(1)),
        HalfOpenInterval(Rational(1, 7), Rational(3, 7)),
        HalfOpenInterval(Rational(1, 3), Rational(1, 2)),
        HalfOpenInterval(Rational(99, 100), Rational(1)),
        HalfOpenInterval(Rational(0), Rational(1, 40)),
    };
    for (uint64_t Q = 2; Q <= 40; ++Q) {
        for (const auto& I : intervals) {
            std::vector<FareyFraction> expect;
            for (const FareyFraction& f : collect(Q)) {
                Rational v = f.to_rational();
                if (I.lo < v && v <= I.hi) expect.push_back(f);
            }
            REQUIRE(stream(Q, I) == expect);
        }
    }

    // tiny interval with no fractions
    CHECK(stream(3, HalfOpenInterval(Rational(1, 100), Rational(2, 100))).empty());
}

TEST_CASE("interval spec parsing", "[farey]") {
    HalfOpenInterval I = HalfOpenInterval::parse("1/3:2/3");
    CHECK(I.lo == Rational(1, 3));
    CHECK(I.hi == Rational(2, 3));
    CHECK(I.width() == Rational(1, 3));
    CHECK_THROWS_AS(HalfOpenInterval::parse("1/2"), std::invalid_argument);
    CHECK_THROWS_AS(HalfOpenInterval::parse("2/3:1/3"), std::domain_error);
    CHECK_THROWS_AS(HalfOpenInterval::parse("0/1:3/2"), std::domain_error);
    CHECK_THROWS_AS(HalfOpenInterval::parse("-1/2:1/2"), std::domain_error);
}

TEST_CASE("order guards", "[farey]") {
    CHECK_THROWS_AS(FareyIterator(0), std::invalid_argument);
    CHECK_THROWS_AS(FareyIterator((uint64_t(1) << 31) + 1), std::invalid_argument);
    CHECK_THROWS_AS(farey::NeighborPairStream(1), std::invalid_argument);
}
