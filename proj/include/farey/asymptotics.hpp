#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "farey/constants.hpp"
#include "farey/interval.hpp"
#include "farey/sieve.hpp"
#include "farey/spacing.hpp"

namespace farey {

// Outcome of a certified comparison; Undecidable means the enclosures still
// overlap after escalating to the top of the precision ladder.
enum class Cert { True, False, Undecidable };

// Enclosure of the Theorem-2 main term
//   (12 log Q / pi^2 - 2 zeta'(2)/zeta(2)^2 + (2 gamma + 1) 6/pi^2) / Q^2.
inline Interval main_term(uint64_t Q, const ConstantTable& ct) {
    if (Q < 2) throw std::invalid_argument("main_term: Q must be >= 2");
    const mpfr_prec_t p = ct.precision;
    Interval logq = log(Interval::from_uinteger(Q, p));
    Interval numer = ct.twelve_over_pi_sq * logq + ct.main_term_constant;
    return numer * Interval::from_rational(Rational::inv_pow(Q, 2), p);
}

// Hall's equivalent form 12/(pi^2 Q^2) (log Q + gamma + 1/2 - zeta'(2)/zeta(2));
// identical as a real number since 2/zeta(2) = 12/pi^2, kept as a second
// algebraic route for cross-checking.
inline Interval main_term_hall_form(uint64_t Q, const ConstantTable& ct) {
    if (Q < 2) throw std::invalid_argument("main_term_hall_form: Q must be >= 2");
    const mpfr_prec_t p = ct.precision;
    Interval logq = log(Interval::from_uinteger(Q, p));
    Interval inner = logq + ct.gamma +
                     Interval::from_rational(Rational(1, 2), p) -
                     ct.zeta_prime_2 / ct.zeta2;
    return ct.twelve_over_pi_sq * inner *
           Interval::from_rational(Rational::inv_pow(Q, 2), p);
}

// Enclosure of the explicit remainder bound (64 log^2 Q + 106 log Q + 269)/Q^3.
inline Interval r14_bound(uint64_t Q, const ConstantTable& ct) {
    if (Q < 2) throw std::invalid_argument("r14_bound: Q must be >= 2");
    const mpfr_prec_t p = ct.precision;
    Interval logq = log(Interval::from_uinteger(Q, p));
    Interval poly = sqr(logq).scaled(64) + logq.scaled(106) +
                    Interval::from_integer(269, p);
    return poly * Interval::from_rational(Rational::inv_pow(Q, 3), p);
}

// Enclosure of C(Q) = S2(Q) Q^2 / log Q from an exact S2.
inline Interval c_of_q(uint64_t Q, const Rational& s2, const ConstantTable& ct) {
    if (Q < 2) throw std::invalid_argument("c_of_q: Q must be >= 2");
    const mpfr_prec_t p = ct.precision;
    Rational scaled = s2 * Rational(long(Q)) * Rational(long(Q));
    return Interval::from_rational(scaled, p) /
           log(Interval::from_uinteger(Q, p));
}

// Per-Q record of the Theorem-2 certification.
struct AsymptoticBreakdown {
    uint64_t Q = 0;
    Rational s2;
    Interval main;
    Interval residual;   // |s2 - main|
    Interval bound;      // r14 bound
    Cert status = Cert::Undecidable;
    mpfr_prec_t precision_used = 0;
};

// Certifies |S2(Q) - main_term(Q)| <= r14_bound(Q), escalating precision
// until the comparison is decided.
inline AsymptoticBreakdown verify_theorem2(uint64_t Q, const Rational& s2,
                                           const ConstantLadder& ladder) {
    AsymptoticBreakdown out;
    out.Q = Q;
    out.s2 = s2;
    for (const ConstantTable& ct : ladder.tables()) {
        out.precision_used = ct.precision;
        out.main = main_term(Q, ct);
        out.bound = r14_bound(Q, ct);
        out.residual =
            abs(Interval::from_rational(s2, ct.precision) - out.main);
        if (out.residual.certainly_at_most(out.bound)) {
            out.status = Cert::True;
            return out;
        }
        if (out.bound.certainly_less(out.residual)) {
            out.status = Cert::False;
            return out;
        }
    }
    out.status = Cert::Undecidable;
    return out;
}

inline AsymptoticBreakdown verify_theorem2(uint64_t Q, const SieveTables& sieve,
                                           const PrefixTables& tables,
                                           const ConstantLadder& ladder) {
    return verify_theorem2(Q, s2_moebius(Q, sieve, tables), ladder);
}

// Enclosure of the refined residual S2(Q) - main - 4 U(Q) log Q / Q^3
// (U exact, log enclosed).
inline Interval kanemitsu_refined_residual(uint64_t Q, const Rational& s2,
                                           const SieveTables& sieve,
                                           const ConstantTable& ct) {
    const mpfr_prec_t p = ct.precision;
    Rational u = kanemitsu_u(uint32_t(Q), sieve);
    Interval logq = log(Interval::from_uinteger(Q, p));
    Interval correction =
        Interval::from_rational(u * Rational(4) * Rational::inv_pow(Q, 3), p) *
        logq;
    return Interval::from_rational(s2, p) - main_term(Q, ct) - correction;
}

// The explicit upper bound function for C(Q):
//   G(x) = 12/pi^2 + K/log x + 64 log x / x + 106/x + 269/(x log x)
// with K = -2 zeta'(2)/zeta(2)^2 + (2 gamma + 1) 6/pi^2.
inline Interval g_bound(const Interval& x, const ConstantTable& ct) {
    const mpfr_prec_t p = ct.precision;
    if (!x.certainly_greater(Rational(1)))
        throw std::domain_error("g_bound: needs x > 1");
    Interval lx = log(x);
    return ct.twelve_over_pi_sq + ct.main_term_constant / lx +
           (lx.scaled(64)) / x + Interval::from_integer(106, p) / x +
           Interval::from_integer(269, p) / (x * lx);
}

// The four summands of
//   G'(x) = -K/(x log^2 x) + 64 (1 - log x)/x^2 - 106/x^2
//           - 269 (log x + 1)/(x^2 log^2 x),
// each enclosed separately; for x >= e every one of them is negative on its
// own, which is the sign argument carrying the bound past any finite window.
inline std::array<Interval, 4> g_prime_terms(const Interval& x,
                                             const ConstantTable& ct) {
    const mpfr_prec_t p = ct.precision;
    if (!x.certainly_greater(Rational(1)))
        throw std::domain_error("g_prime_terms: needs x > 1");
    Interval one = Interval::from_integer(1, p);
    Interval lx = log(x);
    Interval lx2 = sqr(lx);
    Interval x2 = sqr(x);
    return {-(ct.main_term_constant / (x * lx2)),
            (one - lx).scaled(64) / x2,
            -(Interval::from_integer(106, p) / x2),
            -((lx + one).scaled(269) / (x2 * lx2))};
}

inline Interval g_bound_derivative(const Interval& x, const ConstantTable& ct) {
    auto t = g_prime_terms(x, ct);
    return t[0] + t[1] + t[2] + t[3];
}

struct GCertificate {
    bool certified = false;
    uint64_t from = 0, to = 0;
    uint64_t cells = 0;          // interval cells proven strictly negative
    mpfr_prec_t precision_used = 0;
};

namespace detail {

// Proves G' < 0 on the cell [a, b] by interval evaluation, bisecting on
// failure.  Cells are dyadic rationals represented exactly.
inline bool g_prime_negative_on_cell(const Rational& a, const Rational& b,
                                     const ConstantTable& ct, int depth,
                                     uint64_t& cells) {
    Interval cell = Interval::hull_of_rationals(a, b, ct.precision);
    Interval d = g_bound_derivative(cell, ct);
    if (d.is_negative()) {
        ++cells;
        return true;
    }
    if (depth <= 0) return false;
    Rational mid = (a + b) * Rational(1, 2);
    return g_prime_negative_on_cell(a, mid, ct, depth - 1, cells) &&
           g_prime_negative_on_cell(mid, b, ct, depth - 1, cells);
}

} // namespace detail

// Certifies that G is strictly decreasing on [from, to] by proving G' < 0
// with adaptive bisection, escalating precision if a subdivision bottoms out.
inline GCertificate certify_g_decreasing(uint64_t from, uint64_t to,
                                         const ConstantLadder& ladder,
                                         int max_depth = 48) {
    if (from < 2 || from >= to)
        throw std::invalid_argument("certify_g_decreasing: need 2 <= from < to");
    GCertificate cert;
    cert.from = from;
    cert.to = to;
    for (const ConstantTable& ct : ladder.tables()) {
        cert.cells = 0;
        cert.precision_used = ct.precision;
        if (detail::g_prime_negative_on_cell(Rational(long(from)),
                                             Rational(long(to)), ct, max_depth,
                                             cert.cells)) {
            cert.certified = true;
            return cert;
        }
    }
    cert.certified = false;
    return cert;
}

// Certifies x < 3 style comparisons with ladder escalation.
inline Cert certify_c_below_three(uint64_t Q, const Rational& s2,
                                  const ConstantLadder& ladder,
                                  Interval* enclosure_out = nullptr,
                                  mpfr_prec_t* prec_out = nullptr) {
    const Rational three(3);
    for (const ConstantTable& ct : ladder.tables()) {
        Interval c = c_of_q(Q, s2, ct);
        if (enclosure_out) *enclosure_out = c;
        if (prec_out) *prec_out = ct.precision;
        if (c.certainly_less(three)) return Cert::True;
        if (c.certainly_at_least(three)) return Cert::False;
    }
    return Cert::Undecidable;
}

struct ConjectureRow {
    uint64_t Q = 0;
    Rational s2;
    Interval c;
};

struct ConjectureConfig {
    uint64_t exact_to = 500;      // exact per-Q range [2, exact_to]
    uint64_t checkpoint = 374;    // X with certified G(X) < 3
    uint64_t g_window_to = 1000000; // decreasing-certificate window end
    unsigned threads = 1;
};

struct ConjectureReport {
    ConjectureConfig config;

    bool exact_all_below_three = false;
    uint64_t counterexample_q = 0; // 0 when none

    Interval g_at_checkpoint;
    bool g_checkpoint_below_three = false;
    GCertificate g_decreasing;
    bool tail_terms_negative = false; // term-sign cell far beyond the window

    Interval max_c;
    uint64_t argmax_q = 0;
    bool argmax_certified = false;

    bool undecidable = false;
    std::string diagnostic;
    bool verdict = false;

    std::vector<ConjectureRow> rows;
};

// Full Theorem-1 verification strategy: exact C(Q) < 3 on [2, exact_to],
// certified G(checkpoint) < 3, certified G decreasing on
// [checkpoint, g_window_to]; beyond the window a single far cell witnesses
// that every G' term is itself negative.
inline ConjectureReport verify_conjecture(const ConjectureConfig& cfg,
                                          const SieveTables& sieve,
                                          const PrefixTables& tables,
                                          const ConstantLadder& ladder);

} // namespace farey

#include "farey/verify_conjecture_impl.hpp"
