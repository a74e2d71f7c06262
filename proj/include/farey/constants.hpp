#pragma once

#include <algorithm>
#include <vector>

#include "farey/interval.hpp"

namespace farey {

namespace detail {

// Decimal enclosures of the two constants MPFR does not expose with a
// directed-rounding API we want to rely on alone.  333 digits keeps the
// intrinsic width below 2^(8 - p) for every supported precision p <= 1024.
// The test suite revalidates both against independent Euler-Maclaurin
// computations with explicit remainder bounds.
inline constexpr const char* kGammaLo =
    "0.577215664901532860606512090082402431042159335939923598805767234884867726777664670936947063291746749514631447249807082480960504014486542836224173997644923536253500333742937337737673942792595258247094916008735203948165670853233151776611528621199501507984793745085705740029921354786146694029604325421519058775535267331399254012967420513";
inline constexpr const char* kGammaHi =
    "0.577215664901532860606512090082402431042159335939923598805767234884867726777664670936947063291746749514631447249807082480960504014486542836224173997644923536253500333742937337737673942792595258247094916008735203948165670853233151776611528621199501507984793745085705740029921354786146694029604325421519058775535267331399254012967420514";

inline constexpr const char* kZetaPrime2Lo =
    "-0.937548254315843753702574094567864977897860288614829925885433480360443811312707522793689415141151517493113821162416385350594041715961733247197185174912402688214443700163931015045107160373574873135295605713355259331805051487253479998471739757031755030261907346100823470064141398022998424311534856105707655972552086501051643857775101141";
inline constexpr const char* kZetaPrime2Hi =
    "-0.937548254315843753702574094567864977897860288614829925885433480360443811312707522793689415141151517493113821162416385350594041715961733247197185174912402688214443700163931015045107160373574873135295605713355259331805051487253479998471739757031755030261907346100823470064141398022998424311534856105707655972552086501051643857775101140";

// Extra bits used when building the shared constant table, so that table
// enclosures stay well below the 1e-40 width contract at the default
// 128-bit working precision.
inline constexpr mpfr_prec_t kConstantGuardBits = 32;

} // namespace detail

// Enclosure of the Euler-Mascheroni constant.
inline Interval const_euler_gamma(mpfr_prec_t precision) {
    return Interval::from_decimal_bounds(detail::kGammaLo, detail::kGammaHi,
                                         precision);
}

// Enclosure of zeta'(2) = -sum_{n>=2} log(n)/n^2.
inline Interval const_zeta_prime_2(mpfr_prec_t precision) {
    return Interval::from_decimal_bounds(detail::kZetaPrime2Lo,
                                         detail::kZetaPrime2Hi, precision);
}

inline Interval const_pi(mpfr_prec_t precision) {
    Interval x(precision);
    mpfr_const_pi(x.lo_raw(), MPFR_RNDD);
    mpfr_const_pi(x.hi_raw(), MPFR_RNDU);
    return x;
}

inline Interval const_zeta_ui(unsigned long n, mpfr_prec_t precision) {
    Interval x(precision);
    mpfr_zeta_ui(x.lo_raw(), n, MPFR_RNDD);
    mpfr_zeta_ui(x.hi_raw(), n, MPFR_RNDU);
    return x;
}

// Shared read-only table of the analytic constants plus the derived
// combinations that appear in the asymptotic main term and in the bound
// function.  Built once per working precision.
struct ConstantTable {
    mpfr_prec_t precision = kDefaultPrecision;

    Interval pi, gamma, zeta2, zeta4, zeta_prime_2;

    Interval pi_sq;                 // pi^2
    Interval twelve_over_pi_sq;     // 12/pi^2
    Interval coeff_zeta;            // -2 zeta'(2)/zeta(2)^2
    Interval coeff_gamma;           // (2 gamma + 1) * 6/pi^2
    Interval main_term_constant;    // coeff_zeta + coeff_gamma

    static ConstantTable build(mpfr_prec_t precision) {
        if (precision < kMinPrecision)
            throw std::invalid_argument("ConstantTable: precision below 64 bits");
        const mpfr_prec_t p = precision + detail::kConstantGuardBits;
        ConstantTable t;
        t.precision = precision;
        t.pi = const_pi(p);
        t.gamma = const_euler_gamma(p);
        t.zeta2 = const_zeta_ui(2, p);
        t.zeta4 = const_zeta_ui(4, p);
        t.zeta_prime_2 = const_zeta_prime_2(p);

        t.pi_sq = sqr(t.pi);
        t.twelve_over_pi_sq = Interval::from_integer(12, p) / t.pi_sq;
        t.coeff_zeta =
            (-t.zeta_prime_2.scaled(2)) / sqr(t.zeta2);
        t.coeff_gamma = (t.gamma.scaled(2) + Interval::from_integer(1, p)) *
                        (Interval::from_integer(6, p) / t.pi_sq);
        t.main_term_constant = t.coeff_zeta + t.coeff_gamma;
        return t;
    }
};

// Eagerly built escalation ladder 128 -> 256 -> ... used whenever a certified
// comparison comes back undecidable at the working precision.  Immutable
// after construction, safe to share across threads.
class ConstantLadder {
public:
    explicit ConstantLadder(mpfr_prec_t base = kDefaultPrecision,
                            mpfr_prec_t max = kMaxPrecision) {
        if (base < kMinPrecision || base > max)
            throw std::invalid_argument("ConstantLadder: bad precision range");
        for (mpfr_prec_t p = base; p <= max; p *= 2) tables_.push_back(ConstantTable::build(p));
    }

    const std::vector<ConstantTable>& tables() const { return tables_; }
    const ConstantTable& base() const { return tables_.front(); }
    const ConstantTable& top() const { return tables_.back(); }

private:
    std::vector<ConstantTable> tables_;
};

} // namespace farey
