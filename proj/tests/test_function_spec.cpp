#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "bbops/function_spec.hpp"

using namespace bbops;

TEST_CASE("parse_function grammar") {
    const FunctionSpec sq = parse_function("poly:0,0,1");
    CHECK(sq(0.5) == doctest::Approx(0.25));
    CHECK(sq.is_polynomial());
    CHECK(sq.coeffs().size() == 3);

    const FunctionSpec h = parse_function("holder:0.5");
    CHECK(h(0.75) == doctest::Approx(0.5));
    CHECK_FALSE(h.is_polynomial());

    CHECK(parse_function("abs_half")(0.1) == doctest::Approx(0.4));
    CHECK(parse_function("sin_pi")(0.5) == doctest::Approx(1.0));
    CHECK(parse_function("exp_x")(1.0) == doctest::Approx(std::exp(1.0)));

    CHECK_THROWS_AS(parse_function("csv:missing.csv"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_function("nope"), doctest::Contains("nope"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_function("poly:"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function("poly:1,zebra"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function("holder:1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function("holder:0"), std::invalid_argument);
}

TEST_CASE("csv ingestion") {
    const char* path = "fs_test_ok.csv";
    {
        std::ofstream out(path);
        out << "x,value\n0.5,2.0\n0,1\n1,3\n0.5,2.0\n";  // unsorted + exact dup
    }
    const FunctionSpec f = parse_function(std::string("csv:") + path);
    CHECK(f(0.0) == doctest::Approx(1.0));
    CHECK(f(0.25) == doctest::Approx(1.5));
    CHECK(f(0.5) == doctest::Approx(2.0));
    CHECK(f(1.0) == doctest::Approx(3.0));
    std::remove(path);

    const char* bad1 = "fs_test_noend.csv";
    {
        std::ofstream out(bad1);
        out << "0.1,1\n0.9,2\n";
    }
    CHECK_THROWS_AS(parse_function(std::string("csv:") + bad1), std::runtime_error);
    std::remove(bad1);

    const char* bad2 = "fs_test_dup.csv";
    {
        std::ofstream out(bad2);
        out << "0,1\n0.5,2\n0.5,3\n1,4\n";  // same x, different values
    }
    CHECK_THROWS_AS(parse_function(std::string("csv:") + bad2), std::runtime_error);
    std::remove(bad2);
}

TEST_CASE("derivatives and tags") {
    const FunctionSpec sq = FunctionSpec::poly({1.0, -2.0, 3.0});
    REQUIRE(sq.has_derivative());
    const FunctionSpec d = sq.derivative();
    CHECK(d(0.5) == doctest::Approx(-2.0 + 6.0 * 0.5));
    CHECK(sq.is_c1());
    CHECK(sq.w_lambda_member());

    const FunctionSpec s = FunctionSpec::sin_pi();
    CHECK(s.derivative()(0.0) == doctest::Approx(std::acos(-1.0)));
    CHECK(s.is_c1());

    const FunctionSpec e = FunctionSpec::exp_x();
    CHECK(e.derivative()(0.3) == doctest::Approx(std::exp(0.3)));

    const FunctionSpec a = FunctionSpec::abs_half();
    CHECK(a.w_lambda_member());
    CHECK_FALSE(a.is_c1());
    CHECK(a.derivative()(0.9) == 1.0);
    CHECK(a.derivative()(0.1) == -1.0);

    const FunctionSpec h = FunctionSpec::holder(0.5);
    CHECK_FALSE(h.w_lambda_member());
    CHECK_FALSE(h.has_derivative());
    CHECK_THROWS_AS(h.derivative(), std::logic_error);
}

TEST_CASE("builtin registry") {
    const auto& reg = builtin_registry();
    CHECK(reg.size() == 6);
    for (const auto& f : reg) {
        CHECK_FALSE(f.name().empty());
        // continuous on [0,1]: spot check no NaN/inf
        for (double x : {0.0, 0.3, 0.5, 1.0})
            CHECK(std::isfinite(f(x)));
    }
}
