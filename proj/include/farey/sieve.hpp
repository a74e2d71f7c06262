#pragma once

#include <gmp.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "farey/rational.hpp"

namespace farey {

inline constexpr uint64_t kDefaultMemCapBytes = 2ull << 30; // 2 GiB

// Moebius mu and Euler totient phi up to a fixed limit, filled by a single
// linear-sieve pass.  Immutable after construction.
struct SieveTables {
    uint32_t limit = 0;
    std::vector<int8_t> mu;    // mu[0] unused
    std::vector<uint32_t> phi; // phi[0] unused
};

inline SieveTables build_sieve(uint32_t limit,
                               uint64_t mem_cap_bytes = kDefaultMemCapBytes) {
    if (limit < 1) throw std::invalid_argument("build_sieve: limit must be >= 1");
    // mu + phi + composite flags + primes list, roughly 10 bytes per entry
    if (10ull * (limit + 1) > mem_cap_bytes)
        throw std::length_error("build_sieve: limit exceeds configured memory cap");

    SieveTables t;
    t.limit = limit;
    t.mu.assign(limit + 1, 0);
    t.phi.assign(limit + 1, 0);
    t.mu[1] = 1;
    t.phi[1] = 1;

    std::vector<uint32_t> primes;
    std::vector<bool> composite(limit + 1, false);
    for (uint32_t i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            t.mu[i] = -1;
            t.phi[i] = i - 1;
        }
        for (uint32_t p : primes) {
            uint64_t ip = uint64_t(i) * p;
            if (ip > limit) break;
            composite[ip] = true;
            if (i % p == 0) {
                t.mu[ip] = 0;
                t.phi[ip] = t.phi[i] * p;
                break;
            }
            t.mu[ip] = -t.mu[i];
            t.phi[ip] = t.phi[i] * (p - 1);
        }
    }
    return t;
}

// Exact value of sum_{d<=N} mu(d)/d.
inline Rational weighted_mertens(uint32_t N, const SieveTables& tables) {
    if (N < 1 || N > tables.limit)
        throw std::out_of_range("weighted_mertens: N out of sieve range");
    Rational sum;
    for (uint32_t d = 1; d <= N; ++d)
        if (tables.mu[d] != 0) sum += Rational(tables.mu[d], d);
    return sum;
}

struct MertensSweepResult {
    bool within_unit = true;     // |sum_{d<=N} mu(d)/d| <= 1 for every N checked
    uint32_t first_violation = 0; // 0 when none
};

// Streaming exact check of |sum_{d<=N} mu(d)/d| <= 1 for every N <= N_max.
// The partial sum is carried as num/den with den = lcm(1..N), so each step
// is O(size) big-integer work and no gcd reduction is ever needed; the
// inequality becomes the integer comparison |num| <= den.
inline MertensSweepResult weighted_mertens_within_unit(uint32_t N_max,
                                                       const SieveTables& tables) {
    if (N_max < 1 || N_max > tables.limit)
        throw std::out_of_range("weighted_mertens_within_unit: N out of sieve range");
    MertensSweepResult res;
    mpz_t num, den, t;
    mpz_init_set_si(num, 0);
    mpz_init_set_ui(den, 1);
    mpz_init(t);
    for (uint32_t d = 1; d <= N_max; ++d) {
        unsigned long g = mpz_gcd_ui(nullptr, den, d);
        unsigned long grow = d / g;
        if (grow > 1) { // d introduced a new prime power: den, num scale together
            mpz_mul_ui(den, den, grow);
            mpz_mul_ui(num, num, grow);
        }
        if (tables.mu[d] != 0) {
            mpz_divexact_ui(t, den, d);
            if (tables.mu[d] > 0)
                mpz_add(num, num, t);
            else
                mpz_sub(num, num, t);
        }
        if (mpz_cmpabs(num, den) > 0) {
            res.within_unit = false;
            res.first_violation = d;
            break;
        }
    }
    mpz_clear(num);
    mpz_clear(den);
    mpz_clear(t);
    return res;
}

// Exact value of U(x) = sum_{d<=x} mu(d)/d * ({x/d} - 1/2), where {.} is the
// fractional part; the floor is exact integer division throughout.
inline Rational kanemitsu_u(uint32_t x, const SieveTables& tables) {
    if (x < 1 || x > tables.limit)
        throw std::out_of_range("kanemitsu_u: x out of sieve range");
    Rational sum;
    for (uint32_t d = 1; d <= x; ++d) {
        if (tables.mu[d] == 0) continue;
        // mu(d)/d * ((x mod d)/d - 1/2) = mu(d) * (2(x mod d) - d) / (2 d^2)
        long num = long(tables.mu[d]) * (2l * long(x % d) - long(d));
        sum += Rational(num, 2ul * d * d);
    }
    return sum;
}

// |F_Q| with the 0/1 endpoint included: 1 + sum_{q<=Q} phi(q).
inline uint64_t farey_count(uint32_t Q, const SieveTables& tables) {
    if (Q < 1 || Q > tables.limit)
        throw std::out_of_range("farey_count: Q out of sieve range");
    uint64_t n = 1;
    for (uint32_t q = 1; q <= Q; ++q) n += tables.phi[q];
    return n;
}

} // namespace farey
