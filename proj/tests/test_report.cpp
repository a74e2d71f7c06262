#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <sstream>

#include "farey/report.hpp"

using farey::Interval;
using farey::Rational;

namespace {

std::pair<std::vector<farey::ReportRow>, farey::ReportTrailer> sample_report() {
    auto sieve = farey::build_sieve(10);
    auto tables = farey::build_prefix_tables(10, sieve);
    farey::ConstantLadder ladder(128);
    std::vector<farey::ReportRow> rows;
    for (uint64_t Q = 2; Q <= 5; ++Q) {
        Rational s2 = farey::s2_moebius(Q, sieve, tables);
        auto bd = farey::verify_theorem2(Q, s2, ladder);
        Interval c = farey::c_of_q(Q, s2, ladder.base());
        rows.push_back(farey::make_report_row(Q, farey::farey_count(Q, sieve), bd, c));
    }
    farey::ReportTrailer trailer;
    trailer.verdict = "verified";
    trailer.argmax_q = 2;
    trailer.max_c_lo = rows[0].c_lo;
    trailer.max_c_hi = rows[0].c_hi;
    trailer.elapsed_s = 0.25;
    return {rows, trailer};
}

} // namespace

TEST_CASE("csv schema", "[report]") {
    auto [rows, trailer] = sample_report();
    std::ostringstream os;
    farey::write_csv(os, rows, &trailer);
    std::string text = os.str();

    CHECK(text.rfind("Q,N,S2_num,S2_den,S2_dec,C_lo,C_hi,main_lo,main_hi,"
                     "residual_hi,bound_lo,pass\n", 0) == 0);
    CHECK(text.find("\n2,3,1,2,") != std::string::npos);  // Q=2: N=3, S2=1/2
    CHECK(text.find("\n3,5,5,18,") != std::string::npos); // Q=3: N=5, S2=5/18
    CHECK(text.find("# verdict=verified") != std::string::npos);
    CHECK(text.find("# argmax_q=2") != std::string::npos);
    CHECK(text.find("# precision_bits=128") != std::string::npos);

    // every row line has exactly 11 commas
    std::istringstream is(text);
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        CHECK(std::count(line.begin(), line.end(), ',') == 11);
    }
}

TEST_CASE("jsonl mirrors the csv fields", "[report]") {
    auto [rows, trailer] = sample_report();
    std::ostringstream os;
    farey::write_jsonl(os, rows, &trailer);
    std::istringstream is(os.str());

    std::string line;
    size_t n = 0;
    while (std::getline(is, line)) {
        auto j = nlohmann::json::parse(line);
        if (j.contains("trailer")) {
            CHECK(j["trailer"]["verdict"] == "verified");
            CHECK(j["trailer"]["argmax_q"] == 2);
            continue;
        }
        ++n;
        for (const char* key : {"Q", "N", "S2_num", "S2_den", "S2_dec", "C_lo",
                                "C_hi", "main_lo", "main_hi", "residual_hi",
                                "bound_lo", "pass"})
            REQUIRE(j.contains(key));
        CHECK(j["pass"].is_boolean());
    }
    CHECK(n == rows.size());
}

TEST_CASE("row content is outward and consistent", "[report]") {
    auto [rows, trailer] = sample_report();
    const farey::ReportRow& r2 = rows[0];
    CHECK(r2.Q == 2);
    CHECK(r2.s2_num == "1");
    CHECK(r2.s2_den == "2");
    CHECK(r2.pass);
    // printed bounds bracket: lo string must compare below hi string numerically
    CHECK(std::stod(r2.c_lo) <= std::stod(r2.c_hi));
    CHECK(std::stod(r2.main_lo) <= std::stod(r2.main_hi));
    CHECK(r2.s2_dec.find("(w=") != std::string::npos);
}

TEST_CASE("serialization is deterministic", "[report]") {
    auto [rows1, trailer1] = sample_report();
    auto [rows2, trailer2] = sample_report();
    std::ostringstream a, b, ja, jb;
    farey::write_csv(a, rows1, nullptr);
    farey::write_csv(b, rows2, nullptr);
    CHECK(a.str() == b.str());
    farey::write_jsonl(ja, rows1, nullptr);
    farey::write_jsonl(jb, rows2, nullptr);
    CHECK(ja.str() == jb.str());
}
