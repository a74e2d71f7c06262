#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "farey/asymptotics.hpp"

namespace farey {

inline constexpr const char* kToolVersion = "0.1.0";

inline constexpr const char* kCsvHeader =
    "Q,N,S2_num,S2_den,S2_dec,C_lo,C_hi,main_lo,main_hi,residual_hi,bound_lo,pass";

// One verification row.  Exact fields are decimal integer strings of
// arbitrary length; decimal fields are outward-rounded 21-digit scientific
// notation.  Certification logic never reads these strings back.
struct ReportRow {
    uint64_t Q = 0;
    uint64_t N = 0;
    std::string s2_num, s2_den;
    std::string s2_dec; // midpoint with width annotation, e.g. 2.7e-01(w=9.6e-39)
    std::string c_lo, c_hi;
    std::string main_lo, main_hi;
    std::string residual_hi, bound_lo;
    bool pass = false;
};

struct ReportTrailer {
    std::string verdict; // verified | failed | undecidable
    uint64_t argmax_q = 0;
    std::string max_c_lo, max_c_hi;
    std::string version = kToolVersion;
    long precision = kDefaultPrecision;
    double elapsed_s = 0.0;
};

inline std::string decimal_with_width(const Interval& x, int digits = 20) {
    return x.mid_string(digits) + "(w=" + x.width_string() + ")";
}

inline ReportRow make_report_row(uint64_t Q, uint64_t N,
                                 const AsymptoticBreakdown& b,
                                 const Interval& c) {
    ReportRow r;
    r.Q = Q;
    r.N = N;
    r.s2_num = b.s2.num_string();
    r.s2_den = b.s2.den_string();
    r.s2_dec = decimal_with_width(
        Interval::from_rational(b.s2, b.precision_used));
    r.c_lo = c.lo_string();
    r.c_hi = c.hi_string();
    r.main_lo = b.main.lo_string();
    r.main_hi = b.main.hi_string();
    r.residual_hi = b.residual.hi_string();
    r.bound_lo = b.bound.lo_string();
    r.pass = (b.status == Cert::True);
    return r;
}

inline void write_csv(std::ostream& os, const std::vector<ReportRow>& rows,
                      const ReportTrailer* trailer = nullptr) {
    os << kCsvHeader << "\n";
    for (const ReportRow& r : rows) {
        os << r.Q << ',' << r.N << ',' << r.s2_num << ',' << r.s2_den << ','
           << r.s2_dec << ',' << r.c_lo << ',' << r.c_hi << ',' << r.main_lo
           << ',' << r.main_hi << ',' << r.residual_hi << ',' << r.bound_lo
           << ',' << (r.pass ? 1 : 0) << "\n";
    }
    if (trailer) {
        os << "# verdict=" << trailer->verdict << "\n";
        os << "# argmax_q=" << trailer->argmax_q << "\n";
        os << "# max_C_lo=" << trailer->max_c_lo << "\n";
        os << "# max_C_hi=" << trailer->max_c_hi << "\n";
        os << "# version=" << trailer->version << "\n";
        os << "# precision_bits=" << trailer->precision << "\n";
        os << "# elapsed_s=" << trailer->elapsed_s << "\n";
    }
}

inline nlohmann::ordered_json row_to_json(const ReportRow& r) {
    nlohmann::ordered_json j;
    j["Q"] = r.Q;
    j["N"] = r.N;
    j["S2_num"] = r.s2_num;
    j["S2_den"] = r.s2_den;
    j["S2_dec"] = r.s2_dec;
    j["C_lo"] = r.c_lo;
    j["C_hi"] = r.c_hi;
    j["main_lo"] = r.main_lo;
    j["main_hi"] = r.main_hi;
    j["residual_hi"] = r.residual_hi;
    j["bound_lo"] = r.bound_lo;
    j["pass"] = r.pass;
    return j;
}

// JSON Lines: one object per row, then one trailer object when present.
inline void write_jsonl(std::ostream& os, const std::vector<ReportRow>& rows,
                        const ReportTrailer* trailer = nullptr) {
    for (const ReportRow& r : rows) os << row_to_json(r).dump() << "\n";
    if (trailer) {
        nlohmann::ordered_json j;
        j["trailer"]["verdict"] = trailer->verdict;
        j["trailer"]["argmax_q"] = trailer->argmax_q;
        j["trailer"]["max_C_lo"] = trailer->max_c_lo;
        j["trailer"]["max_C_hi"] = trailer->max_c_hi;
        j["trailer"]["version"] = trailer->version;
        j["trailer"]["precision_bits"] = trailer->precision;
        j["trailer"]["elapsed_s"] = trailer->elapsed_s;
        os << j.dump() << "\n";
    }
}

} // namespace farey
