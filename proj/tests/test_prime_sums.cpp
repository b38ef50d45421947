#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "explicitlb/constants.hpp"
#include "explicitlb/kahan.hpp"
#include "explicitlb/prime_sums.hpp"

using namespace explicitlb;

namespace {
const LambdaTable& table() {
    static LambdaTable t(1000000);
    return t;
}
}  // namespace

TEST_CASE("mertens lambda sum, hand-enumerated values") {
    // x=10, sigma=1: 0.875 log2 + (4/9) log3 + log5/5 + log7/7
    double expect = 0.875 * std::log(2.0) + 4.0 / 9.0 * std::log(3.0) +
                    std::log(5.0) / 5.0 + std::log(7.0) / 7.0;
    REQUIRE(mertens_lambda_sum(table(), 10.0, 1.0) ==
            Catch::Approx(expect).epsilon(1e-14));
    REQUIRE(mertens_lambda_sum(table(), 2.0, 1.0) ==
            Catch::Approx(0.5 * std::log(2.0)).epsilon(1e-15));
    REQUIRE_THROWS_AS(mertens_lambda_sum(table(), 2e6, 1.0), range_error);
}

TEST_CASE("mertens sum matches log x - gamma within the fluctuation bound") {
    // coarse version of the claimed inequality at x = 1e6
    double s = mertens_lambda_sum(table(), 1e6, 1.0);
    double lx = std::log(1e6);
    REQUIRE(std::fabs(s - lx + kEulerGamma) <= 0.04 * lx * lx / 1000.0);
}

TEST_CASE("truncation parameters from (sigma, lambda, q)") {
    auto p = TruncationParams::from_sigma_lambda_q(1.0, 2.1862, 1e30);
    REQUIRE(p.y == Catch::Approx(std::exp(2.0 * 2.1862)).epsilon(1e-14));
    double logq = std::log(1e30);
    REQUIRE(p.x * p.y == Catch::Approx(logq * logq).epsilon(1e-12));
    REQUIRE(p.x >= 60.0);
    // constructor rejects x < 2 or y < 2
    REQUIRE_THROWS_AS(TruncationParams(1.5, 4.0), domain_error);
    REQUIRE_THROWS_AS(TruncationParams(4.0, 1.5), domain_error);
}

TEST_CASE("truncated weights") {
    TruncationParams p(10.0, 4.0);
    REQUIRE(truncated_lambda(table(), 2, p) ==
            Catch::Approx(std::log(2.0)).epsilon(1e-15));
    REQUIRE(truncated_lambda(table(), 40, p) == 0.0);  // boundary, Lambda(40)=0
    double expect = std::log(2.0) * std::log(40.0 / 16.0) / std::log(4.0);
    REQUIRE(truncated_lambda(table(), 16, p) ==
            Catch::Approx(expect).epsilon(1e-14));
    REQUIRE(expect == Catch::Approx(0.45814534).margin(5e-9));
    REQUIRE_THROWS_AS(truncated_lambda(table(), 41, p), domain_error);
    // continuity at n = x within floating error: weight -> 1
    TruncationParams q(16.0, 4.0);
    REQUIRE(truncated_lambda(table(), 16, q) ==
            Catch::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("s_xy hand-enumerated value and monotonicity in sigma") {
    TruncationParams p(2.0, 2.0);
    double expect = 0.5 * std::log(2.0) +
                    (std::log(3.0) / 3.0) * std::log(4.0 / 3.0) / std::log(2.0);
    REQUIRE(s_xy(table(), p) == Catch::Approx(expect).epsilon(1e-14));
    REQUIRE(expect == Catch::Approx(0.49856163).margin(5e-9));

    // monotone nonincreasing in sigma for fixed (x, y)
    double prev = 1e300;
    for (double sigma : {0.6, 0.7, 0.8, 0.9, 1.0}) {
        TruncationParams ps(50.0, 8.0, sigma, 1.0, 0.0);
        double v = s_xy(table(), ps);
        REQUIRE(v <= prev + 1e-15);
        prev = v;
    }
}

TEST_CASE("summation order independence") {
    // forward Kahan path vs reverse double-double path at 1e6 scale
    const auto& t = table();
    double fwd = mertens_lambda_sum(t, 1e6, 1.0);
    const auto& pp = t.prime_powers();
    const auto& lam = t.lambda_values();
    DoubleDouble rev;
    for (std::size_t i = pp.size(); i-- > 0;)
        if (pp[i] <= 1e6) rev += lam[i] / pp[i];
    REQUIRE(fwd == Catch::Approx(rev.value()).epsilon(1e-11));
}
