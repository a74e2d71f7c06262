#pragma once

#include <gmp.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace farey {

namespace detail {

inline std::string gmp_string(char* s) {
    std::string out(s);
    void (*freefunc)(void*, size_t) = nullptr;
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(s, out.size() + 1);
    return out;
}

} // namespace detail

// Arbitrary-precision rational, always in canonical form: positive
// denominator, gcd(|num|, den) = 1 after every operation.  Thin value
// wrapper over GMP's mpq_t; all exact sums in this library live here.
class Rational {
public:
    Rational() { mpq_init(q_); }

    Rational(long n) { // NOLINT(google-explicit-constructor)
        mpq_init(q_);
        mpq_set_si(q_, n, 1);
    }

    Rational(long num, unsigned long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        mpq_init(q_);
        mpq_set_si(q_, num, den);
        mpq_canonicalize(q_);
    }

    static Rational from_uint_ratio(unsigned long num, unsigned long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        Rational r;
        mpq_set_ui(r.q_, num, den);
        mpq_canonicalize(r.q_);
        return r;
    }

    // Parses "a", "-a" or "a/b" in base 10.
    explicit Rational(const std::string& s) {
        mpq_init(q_);
        if (s.empty() || mpq_set_str(q_, s.c_str(), 10) != 0 ||
            mpz_sgn(mpq_denref(q_)) == 0) {
            mpq_clear(q_);
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        }
        mpq_canonicalize(q_);
    }

    // 1 / base^exp, exact.
    static Rational inv_pow(unsigned long base, unsigned long exp) {
        if (base == 0) throw std::domain_error("Rational::inv_pow: zero base");
        Rational r;
        mpz_set_ui(mpq_numref(r.q_), 1);
        mpz_ui_pow_ui(mpq_denref(r.q_), base, exp);
        return r;
    }

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        mpq_div(q_, q_, o.q_);
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }

    Rational abs() const {
        Rational r;
        mpq_abs(r.q_, q_);
        return r;
    }

    Rational squared() const {
        Rational r;
        mpq_mul(r.q_, q_, q_);
        return r;
    }

    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return mpq_sgn(q_) == 0; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) {
        return !(a == b);
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return mpq_cmp(a.q_, b.q_) < 0;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return mpq_cmp(a.q_, b.q_) <= 0;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    std::string num_string() const {
        return detail::gmp_string(mpz_get_str(nullptr, 10, mpq_numref(q_)));
    }
    std::string den_string() const {
        return detail::gmp_string(mpz_get_str(nullptr, 10, mpq_denref(q_)));
    }
    std::string to_string() const {
        return detail::gmp_string(mpq_get_str(nullptr, 10, q_));
    }

    // Decimal digit count of the denominator; used by memory estimates.
    size_t den_digits() const { return mpz_sizeinbase(mpq_denref(q_), 10); }

    mpq_srcptr raw() const { return q_; }
    mpq_ptr raw() { return q_; }

private:
    mpq_t q_;
};

} // namespace farey
