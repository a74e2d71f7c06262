#pragma once

#include "farey/asymptotics.hpp"
#include "farey/parallel.hpp"

namespace farey {

inline ConjectureReport verify_conjecture(const ConjectureConfig& cfg,
                                          const SieveTables& sieve,
                                          const PrefixTables& tables,
                                          const ConstantLadder& ladder) {
    if (cfg.exact_to < 2)
        throw std::invalid_argument("verify_conjecture: exact range must reach 2");
    if (cfg.checkpoint < 2 || cfg.checkpoint > cfg.exact_to + 1)
        throw std::invalid_argument(
            "verify_conjecture: need 2 <= checkpoint <= exact_to + 1");
    if (cfg.exact_to > tables.limit || cfg.exact_to > sieve.limit)
        throw std::out_of_range("verify_conjecture: tables too small for range");
    if (cfg.g_window_to <= cfg.checkpoint)
        throw std::invalid_argument("verify_conjecture: empty G window");

    ConjectureReport rep;
    rep.config = cfg;

    // (i) exact C(Q) < 3 on [2, exact_to]
    const uint64_t n = cfg.exact_to - 1;
    rep.rows.resize(n);
    std::vector<Cert> certs(n, Cert::Undecidable);
    parallel_for(0, n, cfg.threads, [&](uint64_t i) {
        uint64_t Q = i + 2;
        Rational s2 = s2_moebius(Q, sieve, tables);
        Interval c;
        certs[i] = certify_c_below_three(Q, s2, ladder, &c);
        rep.rows[i] = ConjectureRow{Q, std::move(s2), std::move(c)};
    });

    rep.exact_all_below_three = true;
    for (uint64_t i = 0; i < n; ++i) {
        if (certs[i] == Cert::False) {
            rep.exact_all_below_three = false;
            rep.counterexample_q = i + 2;
            break;
        }
        if (certs[i] == Cert::Undecidable) {
            rep.exact_all_below_three = false;
            rep.undecidable = true;
            rep.diagnostic = "C(Q) comparison undecidable at max precision, Q=" +
                             std::to_string(i + 2);
            break;
        }
    }

    // (iv) max and argmax with a separation certificate
    uint64_t arg = 0;
    for (uint64_t i = 1; i < n; ++i)
        if (mpfr_cmp(rep.rows[i].c.hi_raw(), rep.rows[arg].c.hi_raw()) > 0)
            arg = i;
    rep.argmax_q = arg + 2;
    rep.max_c = rep.rows[arg].c;
    rep.argmax_certified = true;
    for (uint64_t i = 0; i < n && rep.argmax_certified; ++i) {
        if (i == arg) continue;
        if (!rep.rows[i].c.certainly_less(rep.max_c)) rep.argmax_certified = false;
    }

    // (ii) certified G(checkpoint) < 3
    const Rational three(3);
    Cert g_cert = Cert::Undecidable;
    for (const ConstantTable& ct : ladder.tables()) {
        rep.g_at_checkpoint = g_bound(
            Interval::from_uinteger(cfg.checkpoint, ct.precision), ct);
        if (rep.g_at_checkpoint.certainly_less(three)) {
            g_cert = Cert::True;
            break;
        }
        if (rep.g_at_checkpoint.certainly_at_least(three)) {
            g_cert = Cert::False;
            break;
        }
    }
    rep.g_checkpoint_below_three = (g_cert == Cert::True);
    if (g_cert == Cert::False)
        rep.diagnostic = "G(checkpoint) certified >= 3 at checkpoint " +
                         std::to_string(cfg.checkpoint);
    else if (g_cert == Cert::Undecidable) {
        rep.undecidable = true;
        rep.diagnostic = "G(checkpoint) comparison undecidable at max precision";
    }

    // (iii) certified G strictly decreasing on the window ...
    rep.g_decreasing = certify_g_decreasing(cfg.checkpoint, cfg.g_window_to, ladder);
    if (!rep.g_decreasing.certified && rep.diagnostic.empty()) {
        rep.undecidable = true;
        rep.diagnostic = "G-decreasing subdivision bottomed out on window";
    }

    // ... plus the far-cell witness that each G' term is negative on its own
    // once log x > 1 (carries the argument past the finite window)
    {
        const ConstantTable& ct = ladder.base();
        Interval far = Interval::hull_of_rationals(
            Rational(long(cfg.g_window_to)),
            Rational("1000000000000000000"), ct.precision);
        rep.tail_terms_negative = true;
        for (const Interval& term : g_prime_terms(far, ct))
            if (!term.is_negative()) rep.tail_terms_negative = false;
    }

    rep.verdict = rep.exact_all_below_three && rep.g_checkpoint_below_three &&
                  rep.g_decreasing.certified && rep.tail_terms_negative &&
                  !rep.undecidable;
    return rep;
}

} // namespace farey
