#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "explicitlb/constants.hpp"
#include "explicitlb/kahan.hpp"
#include "explicitlb/quadrature.hpp"

using namespace explicitlb;

TEST_CASE("gauss-kronrod integrates polynomials and smooth kernels") {
    auto q1 = integrate([](double x) { return x * x * x - 2 * x + 1; }, -1, 3, 1e-12);
    // antiderivative x^4/4 - x^2 + x
    double exact = (81.0 / 4 - 9 + 3) - (0.25 - 1 - 1);
    REQUIRE(q1.value == Catch::Approx(exact).margin(1e-12));

    auto q2 = integrate([](double x) { return std::exp(-x * x); }, -8, 8, 1e-13);
    REQUIRE(q2.value == Catch::Approx(std::sqrt(kPi)).margin(1e-12));

    auto q3 = integrate([](double x) { return std::cos(20.0 * x); }, 0, kPi, 1e-12);
    REQUIRE(q3.value == Catch::Approx(std::sin(20.0 * kPi) / 20.0).margin(1e-11));
}

TEST_CASE("semi-infinite dyadic integration with envelope") {
    // Int_1^inf dx/x^2 = 1
    auto q = integrate_to_inf([](double x) { return 1.0 / (x * x); }, 1.0,
                              [](double X) { return 1.0 / X; }, 1e-12);
    REQUIRE(q.value == Catch::Approx(1.0).margin(1e-10));
}

TEST_CASE("kahan summation beats naive accumulation") {
    KahanSum k;
    double naive = 0.0;
    // 1e7 copies of a value with a tail that naive summation loses
    for (int i = 0; i < 10000000; ++i) {
        k += 0.1;
        naive += 0.1;
    }
    REQUIRE(std::fabs(k.value() - 1e6) < 1e-7);
    REQUIRE(std::fabs(k.value() - 1e6) <= std::fabs(naive - 1e6));
}

TEST_CASE("double-double accumulator round trip") {
    DoubleDouble d;
    for (int i = 0; i < 1000; ++i) d += 1e-17;
    d += 1.0;
    REQUIRE(d.value() == Catch::Approx(1.0 + 1e-14).epsilon(1e-15));
}
