#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "autonomy/errors.hpp"
#include "support.hpp"

using namespace autonomy;
using support::P;
using support::ev;

namespace {

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t error_position(std::string_view text, std::size_t n) {
    try {
        parse_poly(text, n);
    } catch (const ParseError& e) {
        return e.position();
    }
    return std::string_view::npos;
}

}  // namespace

TEST_CASE("parse_poly: worked expressions") {
    CHECK(parse_poly("s1 - 1", 2) == LaurentPoly::variable(2, 0) - LaurentPoly::constant(2, 1));
    const LaurentPoly expected = LaurentPoly::from_terms(
        2, {{Rational(3), ev({2, -1})}, {Rational(-4), ev({0, 0})}});
    CHECK(parse_poly("3*s1^2*s2^-1 - 4", 2) == expected);
    CHECK(parse_poly("(s1 - s2)*(s1 + s2)", 2) == parse_poly("s1^2 - s2^2", 2));
    CHECK(parse_poly("s1^-2", 1) == parse_poly("s1^(-2)", 1));
    CHECK(parse_poly("-4/7", 1) == LaurentPoly::constant(1, Rational(-4, 7)));
    CHECK(parse_poly("  s1*  s2 ^ 2 ", 2) == parse_poly("s1*s2^2", 2));
    CHECK(parse_poly("-s1^2", 1) == -parse_poly("s1^2", 1));
    CHECK(parse_poly("6/4", 1) == LaurentPoly::constant(1, Rational(3, 2)));
    CHECK(parse_poly("(2*s1)^-1", 1) == parse_poly("1/2*s1^-1", 1));
    CHECK(parse_poly("0", 3).is_zero());
}

TEST_CASE("parse_poly: errors carry a position") {
    CHECK(error_position("s1 + ", 2) == 5);
    CHECK(error_position("s3", 2) == 0);
    CHECK(error_position("s1 $ 2", 2) == 3);
    CHECK(error_position("1/0", 1) == 2);
    CHECK(error_position("(s1 + 1", 1) == 7);
    CHECK(error_position("(s1 + 1)^-1", 1) == 9);
    CHECK(error_position("s1 s2", 2) == 3);
    CHECK(error_position("3/4/5", 1) == 3);
    CHECK(error_position("s0", 2) == 0);
}

TEST_CASE("format_poly") {
    CHECK(format_poly(parse_poly("3*s1^2*s2^-1 - 4", 2)) == "3*s1^2*s2^-1 - 4");
    CHECK(format_poly(parse_poly("-s1", 2)) == "-s1");
    CHECK(format_poly(parse_poly("4/7*s1", 1)) == "4/7*s1");
    CHECK(format_poly(LaurentPoly(2)) == "0");
    CHECK(format_poly(parse_poly("1 - s2 + s1^-1", 2)) == "-s2 + 1 + s1^-1");
}

TEST_CASE("polynomial round trip on random inputs") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 1 + t % 4;
        LaurentPoly p = support::random_poly(rng, n, -4, 4, 7, true);
        const std::string text = format_poly(p);
        CHECK(parse_poly(text, n) == p);
        CHECK(format_poly(parse_poly(text, n)) == text);
    }
}

TEST_CASE("parse_system") {
    SystemMatrix m = parse_system("# worked system\n2 1 2\ns1 - 1\ns2 - 1   # second law\n");
    CHECK(m == support::system(2, 1, {{"s1 - 1"}, {"s2 - 1"}}));
    SystemMatrix empty = parse_system("2 1 0\n");
    CHECK(empty.rows() == 0);
    CHECK(empty.k() == 1);
    SystemMatrix wide = parse_system("2 2 1\ns1 ; s2^-1\n");
    CHECK(wide.at(0, 1) == P("s2^-1", 2));

    CHECK_THROWS_AS(parse_system("2 2 1\ns1\n"), ParseError);
    CHECK_THROWS_AS(parse_system("2 1 2\ns1\n"), ParseError);
    CHECK_THROWS_AS(parse_system("2 1 1\ns1\ns2\n"), ParseError);
    CHECK_THROWS_AS(parse_system(""), ParseError);
    CHECK_THROWS_AS(parse_system("2 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_system("2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_system("2 1 1 9\ns1\n"), ParseError);
    try {
        parse_system("2 1 1\ns1 + s3\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 11);
    }
}

TEST_CASE("system corpus round trips") {
    std::size_t files = 0;
    bool negative = false, rational = false;
    for (const auto& entry : std::filesystem::directory_iterator(AUTONOMY_TEST_DATA)) {
        if (entry.path().extension() != ".sys") continue;
        ++files;
        const std::string text = read_file(entry.path());
        CAPTURE(entry.path().string());
        SystemMatrix m = parse_system(text);
        const std::string once = format_system(m);
        CHECK(parse_system(once) == m);
        CHECK(format_system(parse_system(once)) == once);
        negative = negative || once.find("^-") != std::string::npos;
        rational = rational || once.find('/') != std::string::npos;
    }
    CHECK(files >= 20);
    CHECK(negative);
    CHECK(rational);
}

TEST_CASE("autonomy report serialization") {
    AutonomyReport r = analyze(support::system(2, 1, {{"s1 - 1"}, {"s2 - 1"}}));
    Json j = to_json(r);
    CHECK(j["degree_of_autonomy"] == 2);
    CHECK(j["char_ideal_dimension"] == 0);
    CHECK(j["char_ideal_generators"] == Json::array({"s2 - 1", "s1 - 1"}));
    for (ReportFormat f : {ReportFormat::Json, ReportFormat::Text}) {
        const std::string text = write_report(r, f);
        CHECK(autonomy_report_from_json(parse_report(text)) == r);
        CHECK(write_report(autonomy_report_from_json(parse_report(text)), f) == text);
    }

    SystemMatrix id(2, 2);
    id.append_row({P("1", 2), P("0", 2)});
    id.append_row({P("0", 2), P("1", 2)});
    AutonomyReport z = analyze(id);
    Json jz = to_json(z);
    CHECK(jz["degree_of_autonomy"] == "infinity");
    CHECK(jz["char_ideal_dimension"].is_null());
    for (ReportFormat f : {ReportFormat::Json, ReportFormat::Text})
        CHECK(autonomy_report_from_json(parse_report(write_report(z, f))) == z);

    AutonomyReport u = analyze(support::system(2, 2, {{"s1", "s2"}}));
    for (ReportFormat f : {ReportFormat::Json, ReportFormat::Text})
        CHECK(autonomy_report_from_json(parse_report(write_report(u, f))) == u);
}

TEST_CASE("strength report serialization") {
    StrengthReport r = strength(support::system(2, 1, {{"s1 - 1"}}), support::system(2, 1, {{"s2 - 1"}}));
    Json j = to_json(r);
    CHECK(j["strength"] == 1);
    CHECK(j["max_efficient"] == true);
    for (ReportFormat f : {ReportFormat::Json, ReportFormat::Text}) {
        const std::string text = write_report(r, f);
        CHECK(strength_report_from_json(parse_report(text)) == r);
        CHECK(write_report(strength_report_from_json(parse_report(text)), f) == text);
    }
}

TEST_CASE("experiment report serialization") {
    SampleSpec s;
    s.n = 2;
    s.k = 1;
    s.rows = 3;
    s.degree_bound = 1;
    s.seed = 18446744073709551615ull;
    ExperimentStats st = expt_generic_degree(s, 12);
    Json j = to_json(st);
    CHECK(j["trials"] == 12);
    CHECK(j["seed"] == s.seed);
    CHECK(j["histogram"].contains("infinity"));
    for (ReportFormat f : {ReportFormat::Json, ReportFormat::Text}) {
        const std::string text = write_report(st, f);
        ExperimentStats back = experiment_stats_from_json(parse_report(text));
        CHECK(back.histogram == st.histogram);
        CHECK(back.trials == st.trials);
        CHECK(back.predicted == st.predicted);
        CHECK(back.spec.seed == st.spec.seed);
        CHECK(back.spec.coeff_low == st.spec.coeff_low);
        CHECK(back.spec.density == st.spec.density);
        CHECK(back.wall_time == st.wall_time);
        CHECK(write_report(back, f) == text);
    }
}

TEST_CASE("report readers reject malformed input") {
    CHECK_THROWS_AS(autonomy_report_from_json(Json::parse(R"({"n": 2})")), ValidationError);
    CHECK_THROWS_AS(parse_report("{ not json"), ParseError);
    CHECK_THROWS_AS(parse_report("  indented first\n"), ParseError);
    CHECK_THROWS_AS(degree_from_json(Json(1.5)), ValidationError);
    CHECK_THROWS_AS(parse_report_format("yaml"), ValidationError);
}
