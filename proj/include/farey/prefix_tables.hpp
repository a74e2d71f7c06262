#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "farey/rational.hpp"
#include "farey/sieve.hpp"

namespace farey {

// Exact prefix sums driving the Moebius-inverted evaluation of the squared
// gap sum:
//   B[n] = sum_{m<=n} 1/m^2        H[n] = sum_{m<=n} 1/m
//   F[n] = sum_{m<=n} 1/m^4        conv[n] = sum_{s=2..n} (2B[s-1]/s^2 + 4H[s-1]/s^3)
//   mu_over_d4[n] = sum_{d<=n} mu(d)/d^4
//   A[n] = B[n]^2 - conv[n]  (the inner sum over m,n <= k, m+n >= k+1 of 1/(m^2 n^2))
// Denominators grow like lcm(1..n)^4, so construction is memory-capped.
// Immutable after construction; safe to share across threads.
struct PrefixTables {
    uint32_t limit = 0;
    std::vector<Rational> B, H, F;
    std::vector<Rational> conv;
    std::vector<Rational> mu_over_d4;
    std::vector<Rational> A;
};

// Rough size estimate in bytes; lcm(1..n) has about 0.434 n decimal digits,
// so the six arrays together cost on the order of 7 bytes per (entry, limit).
inline uint64_t prefix_tables_estimate_bytes(uint32_t limit) {
    return 7ull * limit * limit + (1u << 20);
}

inline PrefixTables build_prefix_tables(uint32_t limit, const SieveTables& sieve,
                                        uint64_t mem_cap_bytes = kDefaultMemCapBytes) {
    if (limit < 1)
        throw std::invalid_argument("build_prefix_tables: limit must be >= 1");
    if (limit > sieve.limit)
        throw std::out_of_range("build_prefix_tables: limit exceeds sieve");
    if (prefix_tables_estimate_bytes(limit) > mem_cap_bytes)
        throw std::length_error("build_prefix_tables: limit exceeds configured memory cap");

    PrefixTables t;
    t.limit = limit;
    t.B.resize(limit + 1);
    t.H.resize(limit + 1);
    t.F.resize(limit + 1);
    t.conv.resize(limit + 1);
    t.mu_over_d4.resize(limit + 1);
    t.A.resize(limit + 1);

    for (uint32_t n = 1; n <= limit; ++n) {
        t.B[n] = t.B[n - 1] + Rational::inv_pow(n, 2);
        t.H[n] = t.H[n - 1] + Rational::inv_pow(n, 1);
        t.F[n] = t.F[n - 1] + Rational::inv_pow(n, 4);
        t.conv[n] = t.conv[n - 1];
        if (n >= 2) {
            t.conv[n] += t.B[n - 1] * Rational(2) * Rational::inv_pow(n, 2) +
                         t.H[n - 1] * Rational(4) * Rational::inv_pow(n, 3);
        }
        t.mu_over_d4[n] = t.mu_over_d4[n - 1];
        if (sieve.mu[n] != 0)
            t.mu_over_d4[n] += Rational(sieve.mu[n]) * Rational::inv_pow(n, 4);
        t.A[n] = t.B[n].squared() - t.conv[n];
    }
    return t;
}

} // namespace farey
