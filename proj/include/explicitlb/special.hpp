#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "explicitlb/constants.hpp"

namespace explicitlb {

using complex_t = std::complex<double>;

namespace detail {

// Exact B_{2k} for k = 1..15 (through B30).
inline constexpr std::array<double, 15> kBernoulli2k = {
    1.0 / 6,      -1.0 / 30,          1.0 / 42,      -1.0 / 30,
    5.0 / 66,     -691.0 / 2730,      7.0 / 6,       -3617.0 / 510,
    43867.0 / 798, -174611.0 / 330,   854513.0 / 138, -236364091.0 / 2730,
    8553103.0 / 6, -23749461029.0 / 870, 8615841276005.0 / 14322,
};

// B_{2k}/(2k)! for k = 1..kind, computed once. Indices >15 use the
// zeta(2k) representation, which is exact to double there.
inline const double* bernoulli_over_fact() {
    static const std::array<double, 65> table = [] {
        std::array<double, 65> t{};
        double fact = 1.0;
        for (int k = 1; k <= 15; ++k) {
            fact *= (2.0 * k - 1) * (2.0 * k);
            t[k] = kBernoulli2k[k - 1] / fact;
        }
        for (int k = 16; k <= 64; ++k) {
            double z2k = 1.0;
            for (int j = 2; j <= 8; ++j) z2k += std::pow(j, -2.0 * k);
            t[k] = ((k & 1) ? 2.0 : -2.0) * z2k / std::pow(kTwoPi, 2.0 * k);
        }
        return t;
    }();
    return table.data();
}

}  // namespace detail

// digamma(z) for complex z, Re z > 0: asymptotic series after shifting
// Re z >= 14. Accuracy ~1e-14 on the strips used here.
inline complex_t digamma(complex_t z) {
    complex_t shift(0.0, 0.0);
    while (z.real() < 14.0) {
        shift += 1.0 / z;
        z += 1.0;
    }
    complex_t zi = 1.0 / z, z2 = zi * zi;
    complex_t res = std::log(z) - 0.5 * zi;
    complex_t term = z2;
    for (int k = 1; k <= 8; ++k) {
        res -= detail::kBernoulli2k[k - 1] / (2.0 * k) * term;
        term *= z2;
    }
    return res - shift;
}

inline double digamma(double x) { return digamma(complex_t(x, 0.0)).real(); }

// trigamma, same scheme.
inline complex_t trigamma(complex_t z) {
    complex_t shift(0.0, 0.0);
    while (z.real() < 14.0) {
        shift += 1.0 / (z * z);
        z += 1.0;
    }
    complex_t zi = 1.0 / z, z2 = zi * zi;
    complex_t res = zi + 0.5 * z2;
    complex_t term = z2 * zi;
    for (int k = 1; k <= 8; ++k) {
        res += detail::kBernoulli2k[k - 1] * term;
        term *= z2;
    }
    return res + shift;
}

inline double trigamma(double x) { return trigamma(complex_t(x, 0.0)).real(); }

// Re{Gamma'/Gamma(c + iu/2)} evaluated as a real function of u; the
// explicit-formula integrals call this inside a quadrature, so it has to
// be cheap and smooth.
inline double re_digamma_half(double c, double u) {
    return digamma(complex_t(c, 0.5 * u)).real();
}

}  // namespace explicitlb
