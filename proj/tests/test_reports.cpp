#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bbops/reports.hpp"
#include "bbops/svg.hpp"
#include "bbops/sweep_grammar.hpp"

using namespace bbops;

TEST_CASE("rate report JSON round trip keeps the slope bit-identical") {
    RateReport r;
    r.check = "Theorem 5 (rate)";
    r.config = {OperatorVariant::Generalized, 16, 1.0, 0.5};
    r.fn = "abs_half";
    r.rows = {{16, 0.1113851}, {32, 0.07452658}, {64, 0.05126349}};
    r.slope = -0.5028531876543219;
    r.r2 = 0.9999912345678901;

    const std::string text = to_json(r).dump();
    const auto parsed = rate_report_from_json(nlohmann::json::parse(text));
    CHECK(parsed.slope == r.slope);
    CHECK(parsed.r2 == r.r2);
    CHECK(parsed.rows.size() == r.rows.size());
    CHECK(parsed.rows[1].sup_error == r.rows[1].sup_error);
    CHECK(parsed.config.n == 16);
    CHECK(parsed.config.beta == 0.5);
}

TEST_CASE("report document shape") {
    CheckReport c;
    c.check = "Lemma 7";
    c.pass = true;
    c.value = 0.55;
    c.tolerance = 1.0 + 1e-9;
    c.location = {{"n", 3.0}, {"x", 0.5}};
    const auto doc = make_document("verify", {{"suite", "lemmas"}},
                                   nlohmann::json::array({to_json(c)}));
    CHECK(doc.at("tool_version") == kToolVersion);
    CHECK(doc.at("command") == "verify");
    CHECK(doc.at("reports").size() == 1);
    CHECK(doc.at("reports")[0].at("anchor") == "Lemma 7");
    CHECK(doc.at("reports")[0].at("location").at("x") == 0.5);
}

TEST_CASE("csv writer is RFC-4180 shaped") {
    const char* path = "reports_test.csv";
    write_csv(path, {"n", "sup_error"}, {{"16", "0.25"}, {"32", "0.125"}});
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    CHECK(text == "n,sup_error\r\n16,0.25\r\n32,0.125\r\n");
    std::remove(path);

    const char* path2 = "reports_quote.csv";
    write_csv(path2, {"a", "b"}, {{"x,y", "he said \"hi\""}});
    std::ifstream in2(path2, std::ios::binary);
    std::stringstream ss2;
    ss2 << in2.rdbuf();
    CHECK(ss2.str() == "a,b\r\n\"x,y\",\"he said \"\"hi\"\"\"\r\n");
    std::remove(path2);
}

TEST_CASE("sweep grammar") {
    CHECK(parse_count_list("16:8192:x2") ==
          std::vector<int>{16, 32, 64, 128, 256, 512, 1024, 2048, 4096, 8192});
    CHECK(parse_count_list("1:9:+4") == std::vector<int>{1, 5, 9});
    CHECK(parse_count_list("4,8,15") == std::vector<int>{4, 8, 15});
    CHECK(parse_count_list("64") == std::vector<int>{64});
    const auto ts = parse_value_list("0.125:0.0009:x0.5");
    CHECK(ts.size() == 8);
    CHECK(ts.front() == 0.125);
    CHECK(ts.back() == doctest::Approx(0.125 / 128.0));
    CHECK_THROWS_AS(parse_value_list("1:2:x1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_value_list("2:1:x2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_value_list("1:5:+0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_value_list("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_count_list("1.5,2"), std::invalid_argument);
}

TEST_CASE("svg plot renders a standalone document") {
    SvgPlot plot;
    plot.title = "rate";
    plot.xlabel = "n";
    plot.ylabel = "sup error";
    plot.logx = true;
    plot.logy = true;
    plot.series.push_back({"abs_half", {{16, 0.11}, {32, 0.074}, {64, 0.051}}});
    const std::string svg = plot.render();
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);
    CHECK(svg.find("sup error") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);

    SvgPlot empty;
    CHECK_THROWS_AS(empty.render(), std::invalid_argument);
}

TEST_CASE("format_double round trips") {
    for (double v : {0.1, -3.14159265358979, 1e-300, 123456.789}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}
