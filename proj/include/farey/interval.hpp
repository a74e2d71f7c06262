#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "farey/rational.hpp"

namespace farey {

inline constexpr mpfr_prec_t kDefaultPrecision = 128;
inline constexpr mpfr_prec_t kMaxPrecision = 1024;
inline constexpr mpfr_prec_t kMinPrecision = 64;

// Closed real interval [lo, hi] with outward (directed) rounding on every
// operation: for any x in X and y in Y the exact op(x, y) lies in op(X, Y).
// Endpoints are MPFR floats at a fixed working precision; MPFR's correctly
// rounded RNDD/RNDU modes supply the directed rounding.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec = kDefaultPrecision) {
        init(prec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }

    Interval(const Interval& o) {
        init(mpfr_get_prec(o.lo_));
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    Interval(Interval&& o) noexcept {
        init(mpfr_get_prec(o.lo_));
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }
    Interval& operator=(const Interval& o) {
        if (this != &o) {
            set_prec_destructive(mpfr_get_prec(o.lo_));
            mpfr_set(lo_, o.lo_, MPFR_RNDD);
            mpfr_set(hi_, o.hi_, MPFR_RNDU);
        }
        return *this;
    }
    Interval& operator=(Interval&& o) noexcept {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        return *this;
    }
    ~Interval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    static Interval from_rational(const Rational& r, mpfr_prec_t prec) {
        Interval x(prec);
        mpfr_set_q(x.lo_, r.raw(), MPFR_RNDD);
        mpfr_set_q(x.hi_, r.raw(), MPFR_RNDU);
        return x;
    }

    // Exact for |v| < 2^prec; prec >= 64 makes any int64/uint64 exact.
    static Interval from_integer(long v, mpfr_prec_t prec) {
        Interval x(prec);
        mpfr_set_si(x.lo_, v, MPFR_RNDD);
        mpfr_set_si(x.hi_, v, MPFR_RNDU);
        return x;
    }
    static Interval from_uinteger(unsigned long v, mpfr_prec_t prec) {
        Interval x(prec);
        mpfr_set_ui(x.lo_, v, MPFR_RNDD);
        mpfr_set_ui(x.hi_, v, MPFR_RNDU);
        return x;
    }

    // Hull of an integer range [a, b]; both endpoints exact at prec >= 64.
    static Interval from_integer_range(unsigned long a, unsigned long b,
                                       mpfr_prec_t prec) {
        if (a > b) throw std::invalid_argument("Interval: empty integer range");
        Interval x(prec);
        mpfr_set_ui(x.lo_, a, MPFR_RNDD);
        mpfr_set_ui(x.hi_, b, MPFR_RNDU);
        return x;
    }

    // Hull of [a, b] for exact rationals a <= b.
    static Interval hull_of_rationals(const Rational& a, const Rational& b,
                                      mpfr_prec_t prec) {
        if (b < a) throw std::invalid_argument("Interval: hull bounds out of order");
        Interval x(prec);
        mpfr_set_q(x.lo_, a.raw(), MPFR_RNDD);
        mpfr_set_q(x.hi_, b.raw(), MPFR_RNDU);
        return x;
    }

    // Enclosure from two decimal strings with lo <= true value <= hi.
    static Interval from_decimal_bounds(const char* lo, const char* hi,
                                        mpfr_prec_t prec) {
        Interval x(prec);
        if (mpfr_set_str(x.lo_, lo, 10, MPFR_RNDD) != 0 ||
            mpfr_set_str(x.hi_, hi, 10, MPFR_RNDU) != 0)
            throw std::invalid_argument("Interval: bad decimal bounds");
        if (mpfr_cmp(x.lo_, x.hi_) > 0)
            throw std::invalid_argument("Interval: bounds out of order");
        return x;
    }

    mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }

    bool contains_zero() const {
        return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
    }
    bool contains(const Rational& r) const {
        return mpfr_cmp_q(lo_, r.raw()) <= 0 && mpfr_cmp_q(hi_, r.raw()) >= 0;
    }
    bool contains(const Interval& o) const {
        return mpfr_cmp(lo_, o.lo_) <= 0 && mpfr_cmp(hi_, o.hi_) >= 0;
    }
    bool intersects(const Interval& o) const {
        return mpfr_cmp(lo_, o.hi_) <= 0 && mpfr_cmp(o.lo_, hi_) <= 0;
    }
    bool is_positive() const { return mpfr_sgn(lo_) > 0; }
    bool is_negative() const { return mpfr_sgn(hi_) < 0; }

    // Certified order relations: true only when every point of *this relates
    // to every point of the other operand as stated.
    bool certainly_less(const Interval& o) const {
        return mpfr_cmp(hi_, o.lo_) < 0;
    }
    bool certainly_at_most(const Interval& o) const {
        return mpfr_cmp(hi_, o.lo_) <= 0;
    }
    bool certainly_less(const Rational& r) const {
        return mpfr_cmp_q(hi_, r.raw()) < 0;
    }
    bool certainly_greater(const Rational& r) const {
        return mpfr_cmp_q(lo_, r.raw()) > 0;
    }
    bool certainly_at_least(const Rational& r) const {
        return mpfr_cmp_q(lo_, r.raw()) >= 0;
    }

    friend Interval operator+(const Interval& a, const Interval& b) {
        Interval r(join_prec(a, b));
        mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        Interval r(join_prec(a, b));
        mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
        return r;
    }
    Interval operator-() const {
        Interval r(precision());
        mpfr_neg(r.lo_, hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        return r;
    }

    friend Interval operator*(const Interval& a, const Interval& b) {
        // min/max over the four endpoint products, each rounded outward.
        Interval r(join_prec(a, b));
        mpfr_t t;
        mpfr_init2(t, r.precision());
        mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);

        mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
        mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_clear(t);
        return r;
    }

    friend Interval operator/(const Interval& a, const Interval& b) {
        if (b.contains_zero())
            throw std::domain_error("Interval: division by interval containing 0");
        Interval r(join_prec(a, b));
        mpfr_t t;
        mpfr_init2(t, r.precision());
        mpfr_div(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_div(t, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_div(t, a.hi_, b.lo_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_div(t, a.hi_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);

        mpfr_div(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
        mpfr_div(t, a.lo_, b.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_div(t, a.hi_, b.lo_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_div(t, a.hi_, b.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_clear(t);
        return r;
    }

    // Exact integer scaling, two multiplications instead of eight.
    Interval scaled(long k) const {
        Interval r(precision());
        if (k >= 0) {
            mpfr_mul_si(r.lo_, lo_, k, MPFR_RNDD);
            mpfr_mul_si(r.hi_, hi_, k, MPFR_RNDU);
        } else {
            mpfr_mul_si(r.lo_, hi_, k, MPFR_RNDD);
            mpfr_mul_si(r.hi_, lo_, k, MPFR_RNDU);
        }
        return r;
    }

    // Smallest interval containing both operands.
    friend Interval hull(const Interval& a, const Interval& b) {
        Interval r(join_prec(a, b));
        mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }

    // [-m, m] with m = sup |x|; used to pad certified remainder bounds.
    friend Interval plus_minus(const Interval& x) {
        Interval m = abs(x);
        Interval r(x.precision());
        mpfr_neg(r.lo_, m.hi_, MPFR_RNDD);
        mpfr_set(r.hi_, m.hi_, MPFR_RNDU);
        return r;
    }

    friend Interval abs(const Interval& x) {
        Interval r(x.precision());
        if (mpfr_sgn(x.lo_) >= 0) return x;
        if (mpfr_sgn(x.hi_) <= 0) return -x;
        mpfr_neg(r.lo_, x.lo_, MPFR_RNDU); // |lo| rounded up
        mpfr_max(r.hi_, r.lo_, x.hi_, MPFR_RNDU);
        mpfr_set_zero(r.lo_, 1);
        return r;
    }

    friend Interval sqr(const Interval& x) {
        Interval r(x.precision());
        if (mpfr_sgn(x.lo_) >= 0) {
            mpfr_sqr(r.lo_, x.lo_, MPFR_RNDD);
            mpfr_sqr(r.hi_, x.hi_, MPFR_RNDU);
        } else if (mpfr_sgn(x.hi_) <= 0) {
            mpfr_sqr(r.lo_, x.hi_, MPFR_RNDD);
            mpfr_sqr(r.hi_, x.lo_, MPFR_RNDU);
        } else {
            mpfr_t t;
            mpfr_init2(t, x.precision());
            mpfr_sqr(r.hi_, x.lo_, MPFR_RNDU);
            mpfr_sqr(t, x.hi_, MPFR_RNDU);
            mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
            mpfr_set_zero(r.lo_, 1);
            mpfr_clear(t);
        }
        return r;
    }

    // Natural log; requires the interval to be strictly positive.
    friend Interval log(const Interval& x) {
        if (mpfr_sgn(x.lo_) <= 0)
            throw std::domain_error("Interval::log: argument not strictly positive");
        Interval r(x.precision());
        mpfr_log(r.lo_, x.lo_, MPFR_RNDD);
        mpfr_log(r.hi_, x.hi_, MPFR_RNDU);
        return r;
    }

    // Upper bound on hi - lo, as a double (rounded up; may be +inf).
    double width_upper() const {
        mpfr_t w;
        mpfr_init2(w, precision());
        mpfr_sub(w, hi_, lo_, MPFR_RNDU);
        double d = mpfr_get_d(w, MPFR_RNDU);
        mpfr_clear(w);
        return d;
    }

    std::string lo_string(int digits = 20) const { return format(lo_, digits, 'D'); }
    std::string hi_string(int digits = 20) const { return format(hi_, digits, 'U'); }

    // Midpoint, for display only; never used in certified comparisons.
    std::string mid_string(int digits = 20) const {
        mpfr_t m;
        mpfr_init2(m, precision());
        mpfr_add(m, lo_, hi_, MPFR_RNDN);
        mpfr_div_2ui(m, m, 1, MPFR_RNDN);
        std::string s = format(m, digits, 'N');
        mpfr_clear(m);
        return s;
    }

    std::string width_string() const {
        mpfr_t w;
        mpfr_init2(w, precision());
        mpfr_sub(w, hi_, lo_, MPFR_RNDU);
        std::string s = format(w, 2, 'U');
        mpfr_clear(w);
        return s;
    }

    mpfr_srcptr lo_raw() const { return lo_; }
    mpfr_srcptr hi_raw() const { return hi_; }
    mpfr_ptr lo_raw() { return lo_; }
    mpfr_ptr hi_raw() { return hi_; }

private:
    void init(mpfr_prec_t prec) {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
    }
    void set_prec_destructive(mpfr_prec_t prec) {
        if (mpfr_get_prec(lo_) != prec) {
            mpfr_set_prec(lo_, prec);
            mpfr_set_prec(hi_, prec);
        }
    }
    static mpfr_prec_t join_prec(const Interval& a, const Interval& b) {
        return std::max(a.precision(), b.precision());
    }
    static std::string format(mpfr_srcptr v, int digits, char rnd) {
        char fmt[24];
        std::snprintf(fmt, sizeof fmt, "%%.%dR%ce", digits, rnd);
        char* out = nullptr;
        mpfr_asprintf(&out, fmt, v);
        std::string s(out);
        mpfr_free_str(out);
        return s;
    }

    mpfr_t lo_, hi_;
};

// Outward-rounded enclosure of an exact rational at the given precision.
inline Interval rational_to_interval(const Rational& r, mpfr_prec_t prec) {
    return Interval::from_rational(r, prec);
}

} // namespace farey
