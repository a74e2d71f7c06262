// Command-line front end: exact squared-gap sums over Farey sequences, the
// certified asymptotic checks, and machine-readable verification reports.
//
// Exit codes: 0 verified/success, 1 verification failed, 2 undecidable at
// max precision, 3 usage or I/O error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "farey/asymptotics.hpp"
#include "farey/constants.hpp"
#include "farey/farey.hpp"
#include "farey/parallel.hpp"
#include "farey/prefix_tables.hpp"
#include "farey/report.hpp"
#include "farey/sieve.hpp"
#include "farey/spacing.hpp"

namespace {

using namespace farey;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUndecidable = 2;
constexpr int kExitUsage = 3;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

uint64_t mem_cap_bytes_from_env() {
    if (const char* s = std::getenv("FAREYGAPS_MEM_CAP_MB")) {
        char* end = nullptr;
        unsigned long long mb = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && mb > 0) return mb << 20;
    }
    return kDefaultMemCapBytes;
}

struct CommonOpts {
    long precision = kDefaultPrecision;
    unsigned threads = 1;
    std::string format = "text";
    std::string out;
    uint64_t mem_cap_mb = 0; // 0: use env/default
    uint64_t exact_ceiling = 0; // 0: per-method defaults

    uint64_t mem_cap_bytes() const {
        return mem_cap_mb ? (mem_cap_mb << 20) : mem_cap_bytes_from_env();
    }
    void add_to(CLI::App* cmd, bool with_format = true) {
        cmd->add_option("--precision-bits", precision,
                        "working precision in bits [64, 1024]")
            ->check(CLI::Range(long(kMinPrecision), long(kMaxPrecision)));
        cmd->add_option("--threads", threads, "worker threads (>= 1)")
            ->check(CLI::Range(1u, 1024u));
        if (with_format)
            cmd->add_option("--format", format, "text | csv | json")
                ->check(CLI::IsMember({"text", "csv", "json"}));
        cmd->add_option("--out", out, "output path (default: stdout)");
        cmd->add_option("--mem-cap-mb", mem_cap_mb,
                        "memory cap for sieve/prefix tables (overrides "
                        "FAREYGAPS_MEM_CAP_MB)");
        cmd->add_option("--exact-ceiling", exact_ceiling,
                        "override the per-method exact-mode ceiling");
    }
};

// Writes either to --out or stdout.
struct OutputSink {
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file.emplace(path, std::ios::binary);
            if (!*file) throw std::runtime_error("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file ? *file : std::cout; }
    std::optional<std::ofstream> file;
};

std::vector<uint64_t> farey_count_prefix(uint32_t limit, const SieveTables& sieve) {
    std::vector<uint64_t> n(limit + 1, 0);
    uint64_t acc = 1;
    for (uint32_t q = 1; q <= limit; ++q) {
        acc += sieve.phi[q];
        n[q] = acc;
    }
    return n;
}

struct SweepOutcome {
    std::vector<ReportRow> rows;
    std::vector<Interval> c; // per row
    bool all_pass = true;
    bool any_undecidable = false;
    uint64_t first_failure_q = 0;
};

// Theorem-2 sweep over [from, to]: exact S2 by the Moebius route, certified
// residual-vs-bound per Q, full report rows.
SweepOutcome sweep_rows(uint64_t from, uint64_t to, const SieveTables& sieve,
                        const PrefixTables& tables, const ConstantLadder& ladder,
                        unsigned threads) {
    SweepOutcome out;
    const uint64_t n = to - from + 1;
    out.rows.resize(n);
    out.c.resize(n, Interval(ladder.base().precision));
    std::vector<Cert> status(n, Cert::Undecidable);
    auto counts = farey_count_prefix(uint32_t(to), sieve);

    parallel_for(0, n, threads, [&](uint64_t i) {
        uint64_t Q = from + i;
        Rational s2 = s2_moebius(Q, sieve, tables);
        AsymptoticBreakdown bd = verify_theorem2(Q, s2, ladder);
        Interval c = c_of_q(Q, s2, ladder.base());
        status[i] = bd.status;
        out.rows[i] = make_report_row(Q, counts[Q], bd, c);
        out.c[i] = std::move(c);
    });

    for (uint64_t i = 0; i < n; ++i) {
        if (status[i] == Cert::True) continue;
        out.all_pass = false;
        if (out.first_failure_q == 0) out.first_failure_q = from + i;
        if (status[i] == Cert::Undecidable) out.any_undecidable = true;
    }
    return out;
}

void emit_rows(const CommonOpts& opts, const std::vector<ReportRow>& rows,
               const ReportTrailer* trailer) {
    OutputSink sink(opts.out);
    if (opts.format == "csv")
        write_csv(sink.stream(), rows, trailer);
    else
        write_jsonl(sink.stream(), rows, trailer);
}

// ---------------------------------------------------------------- s2 ----

int cmd_s2(const CommonOpts& opts, uint64_t q, uint64_t from, uint64_t to,
           const std::string& method) {
    if (q) from = to = q;
    if (from < 2 || from > to)
        throw CLI::ValidationError("s2", "need --q >= 2 or 2 <= --from <= --to");

    const bool all = (method == "all");
    const uint64_t direct_ceiling =
        opts.exact_ceiling ? opts.exact_ceiling : kDirectExactCeiling;
    const uint64_t moebius_ceiling =
        opts.exact_ceiling ? opts.exact_ceiling : kMoebiusExactCeiling;

    // the Moebius route needs sieve tables; dense prefix tables pay off for
    // ranges, the streaming variant for a single large Q
    const bool want_moebius = all || method == "moebius";
    std::unique_ptr<SieveTables> sieve;
    std::unique_ptr<PrefixTables> tables;
    if (want_moebius) {
        sieve = std::make_unique<SieveTables>(
            build_sieve(uint32_t(to), opts.mem_cap_bytes()));
        if (to <= kDirectExactCeiling || from < to)
            tables = std::make_unique<PrefixTables>(
                build_prefix_tables(uint32_t(to), *sieve, opts.mem_cap_bytes()));
    }

    OutputSink sink(opts.out);
    std::ostream& os = sink.stream();
    if (opts.format == "csv") os << "Q,S2_num,S2_den,S2_dec,method,agree\n";

    bool agreement_failed = false;
    for (uint64_t Q = from; Q <= to; ++Q) {
        std::vector<S2Result> results;
        auto run = [&](S2Method m) {
            auto t0 = std::chrono::steady_clock::now();
            Rational v;
            switch (m) {
                case S2Method::direct: v = s2_direct(Q, direct_ceiling); break;
                case S2Method::omega: v = s2_omega(Q, direct_ceiling); break;
                case S2Method::moebius:
                    v = tables ? s2_moebius(Q, *sieve, *tables)
                               : s2_moebius_stream(Q, *sieve, moebius_ceiling);
                    break;
            }
            results.push_back(S2Result{Q, std::move(v), m, seconds_since(t0)});
        };
        if (all || method == "direct") run(S2Method::direct);
        if (all || method == "omega") run(S2Method::omega);
        if (all || method == "moebius") run(S2Method::moebius);

        bool agree = true;
        for (const S2Result& r : results)
            if (r.value != results.front().value) agree = false;
        if (!agree) agreement_failed = true;

        const S2Result& first = results.front();
        std::string dec = decimal_with_width(
            Interval::from_rational(first.value, mpfr_prec_t(opts.precision)));
        std::string mname = all ? "all" : to_string(first.method);
        if (opts.format == "csv") {
            os << Q << ',' << first.value.num_string() << ','
               << first.value.den_string() << ',' << dec << ',' << mname << ','
               << (agree ? 1 : 0) << "\n";
        } else if (opts.format == "json") {
            nlohmann::ordered_json j;
            j["Q"] = Q;
            j["S2_num"] = first.value.num_string();
            j["S2_den"] = first.value.den_string();
            j["S2_dec"] = dec;
            j["method"] = mname;
            j["agree"] = agree;
            os << j.dump() << "\n";
        } else {
            os << "S2(" << Q << ") = " << first.value.to_string() << "  ~ " << dec
               << "  [method=" << mname << (all ? (agree ? ", agreement" : ", DISAGREEMENT") : "")
               << "]\n";
            if (!agree)
                for (const S2Result& r : results)
                    os << "    " << to_string(r.method) << " -> "
                       << r.value.to_string() << "\n";
        }
    }
    return agreement_failed ? kExitFailed : kExitOk;
}

// ------------------------------------------------------------- verify ----

int cmd_verify(const CommonOpts& opts, bool conjecture, bool theorem2,
               uint64_t from, uint64_t to, uint64_t checkpoint,
               uint64_t g_window) {
    if (!conjecture && !theorem2)
        throw CLI::ValidationError("verify",
                                   "pass --conjecture and/or --theorem2");
    if (from < 2 || from > to)
        throw CLI::ValidationError("verify", "need 2 <= --from <= --to");

    auto t0 = std::chrono::steady_clock::now();
    const uint32_t limit = uint32_t(to);
    SieveTables sieve = build_sieve(limit, opts.mem_cap_bytes());
    PrefixTables tables = build_prefix_tables(limit, sieve, opts.mem_cap_bytes());
    ConstantLadder ladder(mpfr_prec_t(opts.precision));

    int exit_code = kExitOk;
    std::vector<ReportRow> rows;
    ReportTrailer trailer;
    trailer.precision = opts.precision;
    std::string text_summary;

    if (conjecture) {
        ConjectureConfig cfg;
        cfg.exact_to = to;
        cfg.checkpoint = checkpoint;
        cfg.g_window_to = g_window;
        cfg.threads = opts.threads;
        ConjectureReport rep = verify_conjecture(cfg, sieve, tables, ladder);

        // per-row report data on top of the conjecture rows
        auto counts = farey_count_prefix(limit, sieve);
        rows.resize(rep.rows.size());
        parallel_for(0, rep.rows.size(), opts.threads, [&](uint64_t i) {
            const ConjectureRow& cr = rep.rows[i];
            AsymptoticBreakdown bd = verify_theorem2(cr.Q, cr.s2, ladder);
            rows[i] = make_report_row(cr.Q, counts[cr.Q], bd, cr.c);
        });

        trailer.verdict = rep.verdict ? "verified"
                          : rep.undecidable ? "undecidable"
                                            : "failed";
        trailer.argmax_q = rep.argmax_q;
        trailer.max_c_lo = rep.max_c.lo_string();
        trailer.max_c_hi = rep.max_c.hi_string();

        if (!rep.verdict)
            exit_code = rep.undecidable ? kExitUndecidable : kExitFailed;

        text_summary += "conjecture check C(Q) < 3\n";
        text_summary += "  exact range        [2, " + std::to_string(to) + "]  all below 3: " +
                        (rep.exact_all_below_three ? "certified" : "NO") + "\n";
        if (rep.counterexample_q)
            text_summary += "  counterexample     Q = " + std::to_string(rep.counterexample_q) + "\n";
        text_summary += "  max C(Q)           [" + rep.max_c.lo_string() + ", " +
                        rep.max_c.hi_string() + "] at Q = " +
                        std::to_string(rep.argmax_q) +
                        (rep.argmax_certified ? " (argmax certified)" : "") + "\n";
        text_summary += "  G(" + std::to_string(checkpoint) + ")             [" +
                        rep.g_at_checkpoint.lo_string() + ", " +
                        rep.g_at_checkpoint.hi_string() + "]  < 3: " +
                        (rep.g_checkpoint_below_three ? "certified" : "NO") + "\n";
        text_summary += "  G decreasing on    [" + std::to_string(checkpoint) + ", " +
                        std::to_string(g_window) + "]: " +
                        (rep.g_decreasing.certified ? "certified" : "NO") + " (" +
                        std::to_string(rep.g_decreasing.cells) + " cells, " +
                        std::to_string(rep.g_decreasing.precision_used) + " bits)\n";
        text_summary += std::string("  G' terms beyond window: ") +
                        (rep.tail_terms_negative ? "all negative" : "NOT certified") + "\n";
        if (!rep.diagnostic.empty())
            text_summary += "  diagnostic         " + rep.diagnostic + "\n";
        text_summary += std::string("  verdict            ") +
                        (rep.verdict ? "VERIFIED" : rep.undecidable ? "UNDECIDABLE" : "FAILED") + "\n";
    }

    if (theorem2) {
        SweepOutcome sweep = sweep_rows(from, to, sieve, tables, ladder, opts.threads);
        if (!conjecture) {
            rows = std::move(sweep.rows);
            trailer.verdict = sweep.all_pass ? "verified"
                              : sweep.any_undecidable ? "undecidable"
                                                      : "failed";
        }
        if (!sweep.all_pass) {
            int code = sweep.any_undecidable ? kExitUndecidable : kExitFailed;
            if (exit_code == kExitOk || code == kExitFailed) exit_code = std::max(exit_code, code);
        }
        text_summary += "theorem-2 bound sweep\n";
        text_summary += "  range              [" + std::to_string(from) + ", " + std::to_string(to) + "]\n";
        text_summary += std::string("  |S2 - main| <= R14 bound: ") +
                        (sweep.all_pass ? "certified for every Q" : "FAILED") + "\n";
        if (sweep.first_failure_q)
            text_summary += "  first failure      Q = " + std::to_string(sweep.first_failure_q) + "\n";
    }

    trailer.elapsed_s = seconds_since(t0);
    if (opts.format == "text") {
        OutputSink sink(opts.out);
        sink.stream() << text_summary << "  elapsed            "
                      << trailer.elapsed_s << " s\n";
    } else {
        emit_rows(opts, rows, &trailer);
    }
    return exit_code;
}

// -------------------------------------------------------------- table ----

int cmd_table(const CommonOpts& opts, uint64_t from, uint64_t to) {
    if (from < 2 || from > to)
        throw CLI::ValidationError("table", "need 2 <= --from <= --to");
    if (opts.out.empty())
        throw CLI::ValidationError("table", "--out is required");
    const uint32_t limit = uint32_t(to);
    SieveTables sieve = build_sieve(limit, opts.mem_cap_bytes());
    PrefixTables tables = build_prefix_tables(limit, sieve, opts.mem_cap_bytes());
    ConstantLadder ladder(mpfr_prec_t(opts.precision));

    SweepOutcome sweep = sweep_rows(from, to, sieve, tables, ladder, opts.threads);
    // no trailer: table output is bit-identical across runs and thread counts
    OutputSink sink(opts.out);
    if (opts.format == "json")
        write_jsonl(sink.stream(), sweep.rows, nullptr);
    else
        write_csv(sink.stream(), sweep.rows, nullptr);
    return kExitOk;
}

// ---------------------------------------------------------- constants ----

int cmd_constants(const CommonOpts& opts) {
    ConstantTable ct = ConstantTable::build(mpfr_prec_t(opts.precision));
    OutputSink sink(opts.out);
    std::ostream& os = sink.stream();
    auto line = [&](const char* name, const Interval& v) {
        os << name << "\n  [" << v.lo_string(40) << ",\n   " << v.hi_string(40)
           << "]  width " << v.width_string() << "\n";
    };
    os << "certified enclosures at " << opts.precision << " working bits\n";
    line("pi", ct.pi);
    line("gamma", ct.gamma);
    line("zeta(2)", ct.zeta2);
    line("zeta(4)", ct.zeta4);
    line("zeta'(2)", ct.zeta_prime_2);
    line("12/pi^2", ct.twelve_over_pi_sq);
    line("-2 zeta'(2)/zeta(2)^2", ct.coeff_zeta);
    line("(2 gamma + 1) 6/pi^2", ct.coeff_gamma);
    return kExitOk;
}

// --------------------------------------------------------------- gaps ----

int cmd_gaps(const CommonOpts& opts, uint64_t q, const std::string& interval,
             uint64_t h) {
    if (q < 2) throw CLI::ValidationError("gaps", "need --q >= 2");
    if (h < 1) throw CLI::ValidationError("gaps", "need --h >= 1");
    HalfOpenInterval I = HalfOpenInterval::parse(interval);
    Rational s = s2_general(q, I, h);
    std::string dec =
        decimal_with_width(Interval::from_rational(s, mpfr_prec_t(opts.precision)));

    OutputSink sink(opts.out);
    std::ostream& os = sink.stream();
    if (opts.format == "json") {
        nlohmann::ordered_json j;
        j["Q"] = q;
        j["interval"] = interval;
        j["h"] = h;
        j["S2hI_num"] = s.num_string();
        j["S2hI_den"] = s.den_string();
        j["S2hI_dec"] = dec;
        if (h == 1) {
            Interval c = c_of_q_interval(q, I, mpfr_prec_t(opts.precision));
            j["C_QI_lo"] = c.lo_string();
            j["C_QI_hi"] = c.hi_string();
        }
        os << j.dump() << "\n";
    } else if (opts.format == "csv") {
        os << "Q,interval,h,S2hI_num,S2hI_den,S2hI_dec\n"
           << q << ',' << interval << ',' << h << ',' << s.num_string() << ','
           << s.den_string() << ',' << dec << "\n";
    } else {
        os << "S2," << h << ",(" << I.lo.to_string() << ", " << I.hi.to_string()
           << "](" << q << ") = " << s.to_string() << "  ~ " << dec << "\n";
        if (h == 1) {
            Interval c = c_of_q_interval(q, I, mpfr_prec_t(opts.precision));
            os << "C(Q, I) in [" << c.lo_string() << ", " << c.hi_string()
               << "]\n";
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and certified computations on squared Farey gaps"};
    // --h is the gap-level flag, so help stays long-form only
    app.set_help_flag("--help", "print usage");
    app.require_subcommand(1);

    // s2
    auto* s2cmd = app.add_subcommand("s2", "compute S2(Q) exactly");
    CommonOpts s2opts;
    uint64_t s2_q = 0, s2_from = 2, s2_to = 2;
    std::string s2_method = "moebius";
    s2cmd->add_option("--q", s2_q, "single order Q");
    s2cmd->add_option("--from", s2_from, "range start");
    s2cmd->add_option("--to", s2_to, "range end");
    s2cmd->add_option("--method", s2_method, "direct | omega | moebius | all")
        ->check(CLI::IsMember({"direct", "omega", "moebius", "all"}));
    s2opts.add_to(s2cmd);

    // verify
    auto* vcmd = app.add_subcommand("verify", "run certified verifications");
    CommonOpts vopts;
    bool v_conj = false, v_thm2 = false;
    uint64_t v_from = 2, v_to = 500, v_checkpoint = 374, v_gwindow = 1000000;
    vcmd->add_flag("--conjecture", v_conj, "verify C(Q) < 3");
    vcmd->add_flag("--theorem2", v_thm2, "verify the explicit remainder bound");
    vcmd->add_option("--from", v_from, "sweep start (default 2)");
    vcmd->add_option("--to", v_to, "range end (default 500)");
    vcmd->add_option("--checkpoint", v_checkpoint, "G checkpoint (default 374)");
    vcmd->add_option("--g-window", v_gwindow,
                     "end of the G-decreasing window (default 10^6)");
    vopts.add_to(vcmd);

    // table
    auto* tcmd = app.add_subcommand("table", "write the verification table");
    CommonOpts topts;
    uint64_t t_from = 2, t_to = 1000;
    tcmd->add_option("--from", t_from, "range start (default 2)");
    tcmd->add_option("--to", t_to, "range end (default 1000)");
    topts.add_to(tcmd);

    // constants
    auto* ccmd = app.add_subcommand("constants", "print certified constant enclosures");
    CommonOpts copts;
    copts.add_to(ccmd, /*with_format=*/false);

    // gaps
    auto* gcmd = app.add_subcommand("gaps", "generalized gap sums on a subinterval");
    CommonOpts gopts;
    uint64_t g_q = 0, g_h = 1;
    std::string g_interval = "0/1:1/1";
    gcmd->add_option("--q", g_q, "order Q")->required();
    gcmd->add_option("--interval", g_interval, "half-open interval a/b:c/d");
    gcmd->add_option("--h", g_h, "gap level h >= 1");
    gopts.add_to(gcmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (s2cmd->parsed()) return cmd_s2(s2opts, s2_q, s2_from, s2_to, s2_method);
        if (vcmd->parsed())
            return cmd_verify(vopts, v_conj, v_thm2, v_from, v_to, v_checkpoint,
                              v_gwindow);
        if (tcmd->parsed()) return cmd_table(topts, t_from, t_to);
        if (ccmd->parsed()) return cmd_constants(copts);
        if (gcmd->parsed()) return cmd_gaps(gopts, g_q, g_interval, g_h);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
