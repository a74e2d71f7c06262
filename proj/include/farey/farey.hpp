#pragma once

#include <gmp.h>

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "farey/rational.hpp"

namespace farey {

// Orders above 2^31 would need ~10^18 iterator steps to enumerate, far past
// any practical runtime, so machine-width state with this guard suffices:
// every intermediate k*den product stays below 2^63.
inline constexpr uint64_t kMaxFareyOrder = uint64_t(1) << 31;

// Reduced fraction in [0, 1]; num/den with gcd(num, den) = 1.
struct FareyFraction {
    uint64_t num = 0;
    uint64_t den = 1;

    friend bool operator==(const FareyFraction&, const FareyFraction&) = default;

    Rational to_rational() const {
        return Rational::from_uint_ratio(num, den);
    }
};

inline bool operator<(const FareyFraction& a, const FareyFraction& b) {
    return (unsigned __int128)a.num * b.den < (unsigned __int128)b.num * a.den;
}

// Streaming enumeration of the order-Q Farey sequence on [0, 1] in increasing
// order, by the standard next-term recurrence: from consecutive a/b, c/d the
// successor is (kc - a)/(kd - b) with k = floor((Q + b)/d).  O(1) state.
class FareyIterator {
public:
    explicit FareyIterator(uint64_t Q) : q_(check_order(Q)) {
        cur_ = {0, 1};
        nxt_ = (Q == 1) ? FareyFraction{1, 1} : FareyFraction{1, Q};
    }

    // Seeded form: cur and nxt must be consecutive in F_Q.
    FareyIterator(uint64_t Q, FareyFraction cur, FareyFraction nxt)
        : q_(check_order(Q)), cur_(cur), nxt_(nxt) {}

    bool done() const { return !has_; }
    const FareyFraction& value() const { return cur_; }
    const FareyFraction& peek_next() const { return nxt_; }
    uint64_t order() const { return q_; }

    void advance() {
        if (cur_.num == cur_.den) { // past 1/1: exhausted
            has_ = false;
            return;
        }
        if (nxt_.num == nxt_.den) {
            cur_ = nxt_;
            return;
        }
        uint64_t k = (q_ + cur_.den) / nxt_.den;
        FareyFraction after{k * nxt_.num - cur_.num, k * nxt_.den - cur_.den};
        cur_ = nxt_;
        nxt_ = after;
    }

private:
    static uint64_t check_order(uint64_t Q) {
        if (Q < 1) throw std::invalid_argument("FareyIterator: order must be >= 1");
        if (Q > kMaxFareyOrder)
            throw std::invalid_argument("FareyIterator: order above 2^31 unsupported");
        return Q;
    }

    uint64_t q_;
    FareyFraction cur_, nxt_;
    bool has_ = true;
};

inline FareyIterator farey_iter(uint64_t Q) { return FareyIterator(Q); }

// Denominator pairs (q, q') of consecutive fractions, in enumeration order.
// Every emitted pair satisfies gcd(q, q') = 1 and q + q' > Q.
class NeighborPairStream {
public:
    explicit NeighborPairStream(uint64_t Q) : it_(Q) {
        if (Q < 2)
            throw std::invalid_argument("NeighborPairStream: order must be >= 2");
    }

    bool done() const { return it_.done() || it_.value().num == it_.value().den; }
    std::pair<uint64_t, uint64_t> value() const {
        return {it_.value().den, it_.peek_next().den};
    }
    void advance() { it_.advance(); }

private:
    FareyIterator it_;
};

// Consecutive pair (L, R) in F_Q with L <= x < R, found by a batched
// Stern-Brocot descent: runs of same-direction mediant steps are taken in
// one division, so the walk costs O(log Q * log den(x)) exact operations.
inline std::pair<FareyFraction, FareyFraction> farey_bracket(uint64_t Q,
                                                             const Rational& x) {
    if (Q < 1 || Q > kMaxFareyOrder)
        throw std::invalid_argument("farey_bracket: bad order");
    if (x.sign() < 0 || x >= Rational(1))
        throw std::domain_error("farey_bracket: x must lie in [0, 1)");

    mpz_srcptr a = mpq_numref(x.raw());
    mpz_srcptr b = mpq_denref(x.raw());
    uint64_t p = 0, q = 1, r = 1, s = 1;

    mpz_t lhs, rhs, t;
    mpz_init(lhs);
    mpz_init(rhs);
    mpz_init(t);

    while (q + s <= Q) {
        // lhs = a*q - p*b  (>= 0 since p/q <= x); rhs = r*b - a*s (> 0 since x < r/s)
        mpz_mul_ui(lhs, a, q);
        mpz_mul_ui(t, b, p);
        mpz_sub(lhs, lhs, t);
        mpz_mul_ui(rhs, b, r);
        mpz_mul_ui(t, a, s);
        mpz_sub(rhs, rhs, t);

        if (mpz_cmp(lhs, rhs) >= 0) {
            // mediant <= x: batch right moves, L <- L + t*R while L stays <= x
            mpz_fdiv_q(t, lhs, rhs);
            uint64_t cap = (Q - q) / s;
            uint64_t steps = mpz_fits_ulong_p(t) ? mpz_get_ui(t) : cap;
            if (steps > cap) steps = cap;
            p += steps * r;
            q += steps * s;
        } else {
            // mediant > x: batch left moves, R <- R + t*L while R stays > x
            uint64_t cap = (Q - s) / q;
            uint64_t steps;
            if (mpz_sgn(lhs) == 0) {
                steps = cap; // x == p/q exactly: every left move is valid
            } else {
                mpz_sub_ui(t, rhs, 1);
                mpz_fdiv_q(t, t, lhs);
                steps = mpz_fits_ulong_p(t) ? mpz_get_ui(t) : cap;
                if (steps > cap) steps = cap;
            }
            r += steps * p;
            s += steps * q;
        }
    }
    mpz_clear(lhs);
    mpz_clear(rhs);
    mpz_clear(t);
    return {FareyFraction{p, q}, FareyFraction{r, s}};
}

// Half-open rational interval (lo, hi] inside [0, 1].
struct HalfOpenInterval {
    Rational lo, hi;

    HalfOpenInterval(Rational lo_, Rational hi_)
        : lo(std::move(lo_)), hi(std::move(hi_)) {
        if (lo.sign() < 0 || !(lo < hi) || hi > Rational(1))
            throw std::domain_error("HalfOpenInterval: need 0 <= lo < hi <= 1");
    }

    // Parses "a/b:c/d".
    static HalfOpenInterval parse(const std::string& spec) {
        auto colon = spec.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("interval spec must look like a/b:c/d");
        return HalfOpenInterval(Rational(spec.substr(0, colon)),
                                Rational(spec.substr(colon + 1)));
    }

    Rational width() const { return hi - lo; }
};

// Order-Q Farey fractions gamma with lo < gamma <= hi, increasing.  The
// first fraction is located by farey_bracket rather than by scanning from 0.
class FareyIntervalStream {
public:
    FareyIntervalStream(uint64_t Q, const HalfOpenInterval& I)
        : hi_(I.hi), it_(seed(Q, I.lo)) {
        it_.advance(); // bracket left endpoint is <= lo, skip it
        sync();
    }

    bool done() const { return !has_; }
    const FareyFraction& value() const { return it_.value(); }
    void advance() {
        it_.advance();
        sync();
    }

private:
    static FareyIterator seed(uint64_t Q, const Rational& lo) {
        auto [left, right] = farey_bracket(Q, lo);
        return FareyIterator(Q, left, right);
    }
    void sync() {
        // stop past hi (or past 1/1)
        has_ = !it_.done() &&
               mpq_cmp_ui(hi_.raw(), it_.value().num, it_.value().den) >= 0;
    }

    Rational hi_;
    FareyIterator it_;
    bool has_ = true;
};

} // namespace farey
