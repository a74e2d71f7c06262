#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "farey/farey.hpp"
#include "farey/interval.hpp"
#include "farey/prefix_tables.hpp"
#include "farey/rational.hpp"
#include "farey/sieve.hpp"

namespace farey {

// Exact-mode ceilings.  The direct and lattice methods walk ~0.3 Q^2 terms;
// the Moebius route streams O(Q) prefix updates and O(sqrt Q) blocks.
inline constexpr uint64_t kDirectExactCeiling = 5000;
inline constexpr uint64_t kMoebiusExactCeiling = 100000;

enum class S2Method { direct, omega, moebius };

inline const char* to_string(S2Method m) {
    switch (m) {
        case S2Method::direct: return "direct";
        case S2Method::omega: return "omega";
        case S2Method::moebius: return "moebius";
    }
    return "?";
}

// Per-computation record surfaced by the CLI.
struct S2Result {
    uint64_t Q = 0;
    Rational value;
    S2Method method = S2Method::direct;
    double elapsed_s = 0.0;
};

namespace detail {
inline void check_order_at_least_2(uint64_t Q) {
    if (Q < 2) throw std::invalid_argument("S2(Q) requires Q >= 2");
}
inline void check_ceiling(uint64_t Q, uint64_t ceiling, const char* what) {
    if (Q > ceiling)
        throw std::length_error(std::string(what) +
                                ": Q exceeds the exact-mode ceiling");
}
} // namespace detail

// S2(Q) by streaming the Farey sequence and accumulating each squared gap
// as an exact rational subtraction.  Deliberately avoids the 1/(qq') gap
// identity so it stays an independent route.
inline Rational s2_direct(uint64_t Q, uint64_t ceiling = kDirectExactCeiling) {
    detail::check_order_at_least_2(Q);
    detail::check_ceiling(Q, ceiling, "s2_direct");
    Rational sum;
    FareyIterator it(Q);
    Rational prev = it.value().to_rational();
    for (it.advance(); !it.done(); it.advance()) {
        Rational cur = it.value().to_rational();
        sum += (cur - prev).squared();
        prev = std::move(cur);
    }
    return sum;
}

// S2(Q) as the lattice sum over 1 <= q, q' <= Q with q + q' > Q and
// gcd(q, q') = 1 of 1/(qq')^2.  The gcd is computed per pair, keeping this
// route independent of the sieve tables.
inline Rational s2_omega(uint64_t Q, uint64_t ceiling = kDirectExactCeiling) {
    detail::check_order_at_least_2(Q);
    detail::check_ceiling(Q, ceiling, "s2_omega");
    Rational sum;
    for (uint64_t q = 1; q <= Q; ++q) {
        for (uint64_t qp = Q - q + 1; qp <= Q; ++qp) {
            if (std::gcd(q, qp) != 1) continue;
            sum += Rational::inv_pow(q * qp, 2);
        }
    }
    return sum;
}

// Brute-force A(k) = sum over m, n <= k with m + n >= k + 1 of 1/(m^2 n^2).
// O(k^2); this is the oracle the closed form is tested against.
inline Rational A_bruteforce(uint32_t k) {
    if (k < 1) throw std::invalid_argument("A_bruteforce: k must be >= 1");
    Rational sum;
    for (uint32_t m = 1; m <= k; ++m) {
        Rational m2 = Rational::inv_pow(m, 2);
        for (uint32_t n = (k >= m ? k + 1 - m : 1); n <= k; ++n)
            sum += m2 * Rational::inv_pow(n, 2);
    }
    return sum;
}

// Closed-form A(k) = B_k^2 - sum_{s=2..k} (2 B_{s-1}/s^2 + 4 H_{s-1}/s^3),
// precomputed in the tables.
inline Rational A_exact(uint32_t k, const PrefixTables& tables) {
    if (k < 1 || k > tables.limit)
        throw std::out_of_range("A_exact: k out of table range");
    return tables.A[k];
}

// S2(Q) = sum_{d<=Q} mu(d)/d^4 * A(floor(Q/d)), grouped into the O(sqrt Q)
// blocks of d sharing one quotient so each block is a prefix-sum difference
// times one A value.
inline Rational s2_moebius(uint64_t Q, const SieveTables& sieve,
                           const PrefixTables& tables) {
    detail::check_order_at_least_2(Q);
    if (Q > sieve.limit || Q > tables.limit)
        throw std::out_of_range("s2_moebius: Q out of table range");
    Rational sum;
    uint64_t d = 1;
    while (d <= Q) {
        uint64_t k = Q / d;
        uint64_t d_hi = Q / k;
        Rational block = tables.mu_over_d4[d_hi] - tables.mu_over_d4[d - 1];
        if (!block.is_zero()) sum += block * tables.A[k];
        d = d_hi + 1;
    }
    return sum;
}

// Same sum without dense tables: one streaming pass snapshots B and the
// convolution prefix at the O(sqrt Q) quotient values (giving A there), a
// second pass snapshots the mu/d^4 prefix at block boundaries.  Memory is
// O(sqrt Q) big rationals, which is what makes the 10^5 ceiling reachable.
inline Rational s2_moebius_stream(uint64_t Q, const SieveTables& sieve,
                                  uint64_t ceiling = kMoebiusExactCeiling) {
    detail::check_order_at_least_2(Q);
    detail::check_ceiling(Q, ceiling, "s2_moebius_stream");
    if (Q > sieve.limit) throw std::out_of_range("s2_moebius_stream: Q exceeds sieve");

    std::vector<uint64_t> quotients;   // distinct floor(Q/d), ascending
    std::vector<uint64_t> block_ends;  // d_hi per block, ascending
    for (uint64_t d = 1; d <= Q;) {
        uint64_t k = Q / d;
        uint64_t d_hi = Q / k;
        quotients.push_back(k);
        block_ends.push_back(d_hi);
        d = d_hi + 1;
    }
    std::sort(quotients.begin(), quotients.end());

    // pass 1: A at each needed quotient
    std::vector<Rational> a_at(quotients.size());
    {
        Rational b, h, conv;
        size_t next = 0;
        for (uint64_t s = 1; s <= Q && next < quotients.size(); ++s) {
            b += Rational::inv_pow(s, 2);
            if (s >= 2)
                conv += (b - Rational::inv_pow(s, 2)) * Rational(2) *
                            Rational::inv_pow(s, 2) +
                        h * Rational(4) * Rational::inv_pow(s, 3);
            h += Rational::inv_pow(s, 1);
            while (next < quotients.size() && quotients[next] == s) {
                a_at[next] = b.squared() - conv;
                ++next;
            }
        }
    }

    // pass 2: mu/d^4 prefix at block boundaries, combined immediately
    Rational sum;
    {
        Rational m4, prev_m4;
        size_t block = 0;
        for (uint64_t d = 1; d <= Q && block < block_ends.size(); ++d) {
            if (sieve.mu[d] != 0)
                m4 += Rational(sieve.mu[d]) * Rational::inv_pow(d, 4);
            if (d == block_ends[block]) {
                uint64_t k = Q / d;
                size_t idx = size_t(
                    std::lower_bound(quotients.begin(), quotients.end(), k) -
                    quotients.begin());
                Rational coeff = m4 - prev_m4;
                if (!coeff.is_zero()) sum += coeff * a_at[idx];
                prev_m4 = m4;
                ++block;
            }
        }
    }
    return sum;
}

// Generalized squared gap sum over the fractions of F_Q inside the half-open
// interval I, at level h: sum_{j=1}^{N_I - h} (gamma_{j+h} - gamma_j)^2.
inline Rational s2_general(uint64_t Q, const HalfOpenInterval& I, uint64_t h) {
    detail::check_order_at_least_2(Q);
    if (h < 1) throw std::invalid_argument("s2_general: h must be >= 1");

    // circular window of the last h+1 fractions; the partner h steps back
    // of element `count` lives in slot (count + 1) mod (h + 1)
    std::vector<Rational> window(h + 1);
    size_t count = 0;
    Rational sum;
    for (FareyIntervalStream st(Q, I); !st.done(); st.advance()) {
        Rational cur = st.value().to_rational();
        if (count >= h) sum += (cur - window[(count + 1) % (h + 1)]).squared();
        window[count % (h + 1)] = std::move(cur);
        ++count;
    }
    if (count < h + 1)
        throw std::domain_error("s2_general: fewer than h+1 fractions in interval");
    return sum;
}

// C(Q, I) = S_{2,1,I}(Q) * Q^2 / (|I| log Q); exact parts stay rational
// until the single interval division by log Q.
inline Interval c_of_q_interval(uint64_t Q, const HalfOpenInterval& I,
                                mpfr_prec_t prec = kDefaultPrecision) {
    Rational scaled = s2_general(Q, I, 1) * Rational(long(Q * Q)) / I.width();
    Interval logq = log(Interval::from_uinteger(Q, prec));
    return Interval::from_rational(scaled, prec) / logq;
}

} // namespace farey
