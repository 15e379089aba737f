#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "bbops/smoothness.hpp"

using namespace bbops;

TEST_CASE("phi") {
    CHECK(phi(0.0) == 0.0);
    CHECK(phi(1.0) == 0.0);
    CHECK(phi(0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(phi(0.25) == doctest::Approx(0.4330127018922193).epsilon(1e-14));
    CHECK_THROWS_AS(phi(1.2), std::domain_error);
}

TEST_CASE("sup_norm on the registry shapes") {
    CHECK(sup_norm(FunctionSpec::abs_half()) == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(sup_norm(FunctionSpec::poly({0.0, 1.0, -1.0})) == doctest::Approx(0.25).epsilon(1e-8));
    CHECK(sup_norm(FunctionSpec::sin_pi()) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(sup_norm(FunctionSpec::exp_x()) == doctest::Approx(std::exp(1.0)).epsilon(1e-8));
    CHECK(sup_norm(FunctionSpec::holder(0.5)) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-8));
}

TEST_CASE("classical modulus") {
    CHECK(classical_modulus(FunctionSpec::poly({0.0, 1.0}), 0.3) ==
          doctest::Approx(0.3).epsilon(1e-10));
    CHECK(classical_modulus(FunctionSpec::constant(4.2), 0.5) == 0.0);
    // sup across the kink of |x-1/2|^{1/2} at delta = 0.01 is sqrt(0.01)
    CHECK(std::fabs(classical_modulus(FunctionSpec::holder(0.5), 0.01) - 0.1) <= 2e-3);
    // x^2: sup at u=1, v=0.7
    CHECK(classical_modulus(FunctionSpec::poly({0.0, 0.0, 1.0}), 0.3) ==
          doctest::Approx(0.51).epsilon(1e-6));
}

TEST_CASE("dt_modulus basics") {
    CHECK(dt_modulus(FunctionSpec::constant(1.0), 0.7, 0.3) == 0.0);
    CHECK(dt_modulus(FunctionSpec::poly({0.0, 1.0}), 0.0, 0.1) ==
          doctest::Approx(0.1).epsilon(1e-10));
    // identity with lambda = 1: sup h phi(x) attained at x = 1/2, h = t
    CHECK(std::fabs(dt_modulus(FunctionSpec::poly({0.0, 1.0}), 1.0, 0.2) - 0.1) <= 1e-4);
    CHECK_THROWS_AS(dt_modulus(FunctionSpec::sin_pi(), -0.1, 0.2), std::domain_error);
    CHECK_THROWS_AS(dt_modulus(FunctionSpec::sin_pi(), 0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(dt_modulus(FunctionSpec::sin_pi(), 0.5, 1.5), std::domain_error);
}

TEST_CASE("dt_modulus monotone in t and nonincreasing in lambda") {
    const FunctionSpec fns[] = {FunctionSpec::abs_half(), FunctionSpec::poly({0.0, 0.0, 1.0})};
    for (const auto& f : fns) {
        double prev = 0.0;
        for (double t : {0.01, 0.05, 0.2, 0.6}) {
            const double w = dt_modulus(f, 0.5, t);
            CHECK(w >= prev - 1e-12);
            prev = w;
        }
        for (double t : {0.25, 0.8}) {
            double prev_l = 1e9;
            for (double lam : {0.0, 0.25, 0.5, 0.75, 1.0}) {
                const double w = dt_modulus(f, lam, t);
                CHECK(w <= prev_l + 1e-6);
                prev_l = w;
            }
        }
    }
}

TEST_CASE("zero law") {
    CHECK(dt_modulus(FunctionSpec::constant(-3.0), 1.0, 0.5) == 0.0);
    CHECK(dt_modulus(FunctionSpec::abs_half(), 1.0, 0.5) > 0.0);
}

TEST_CASE("modulus_exponent recovers Hoelder rates") {
    std::vector<double> ts;
    for (int e = 3; e <= 12; ++e)
        ts.push_back(std::pow(2.0, -e));

    const auto lip = modulus_exponent(FunctionSpec::abs_half(), 0.0, ts);
    CHECK(std::fabs(lip.gamma_hat - 1.0) <= 0.05);

    const auto hol = modulus_exponent(FunctionSpec::holder(0.5), 0.0, ts);
    CHECK(std::fabs(hol.gamma_hat - 0.5) <= 0.05);

    const auto smooth = modulus_exponent(FunctionSpec::poly({0.0, 0.0, 1.0}), 0.0, ts);
    CHECK(std::fabs(smooth.gamma_hat - 1.0) <= 0.05);

    CHECK_THROWS_AS(modulus_exponent(FunctionSpec::constant(1.0), 0.0, ts), std::domain_error);
    CHECK_THROWS_AS(modulus_exponent(FunctionSpec::abs_half(), 0.0, {0.5, 0.25}),
                    std::invalid_argument);
    CHECK_THROWS_AS(modulus_exponent(FunctionSpec::abs_half(), 0.0, {0.25, 0.5, 0.001}),
                    std::invalid_argument);
}
