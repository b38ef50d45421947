#pragma once

#include <cmath>
#include <complex>

#include "explicitlb/constants.hpp"
#include "explicitlb/errors.hpp"
#include "explicitlb/quadrature.hpp"
#include "explicitlb/special.hpp"

namespace explicitlb {

// Parameters of the bandlimited majorant h_{a,Delta}: a = sigma - 1/2,
// exponential type 2*pi*Delta. product_guard marks pi*a*Delta >= 1, the
// regime where the 1.725 envelope constant applies.
struct MajorantParams {
    double a;
    double delta;
    bool product_guard;

    MajorantParams(double a_, double delta_) : a(a_), delta(delta_) {
        if (!(a > 0.0)) throw domain_error("majorant: a must be positive");
        if (!(delta > 0.0)) throw domain_error("majorant: delta must be positive");
        product_guard = kPi * a * delta >= 1.0;
    }
};

// Poisson kernel f_a(x) = a/(a^2+x^2).
inline double f_kernel(double a, double x) { return a / (a * a + x * x); }

// g_a(x) = (x^2 - a^2)/(x^2 + a^2)^2.
inline double g_kernel(double a, double x) {
    double d = x * x + a * a;
    return (x * x - a * a) / (d * d);
}

namespace detail {

// sinc(z) = sin(z)/z written as m * e^scale with |m| moderate, so that
// products stay representable for large |Im z|.
struct Scaled {
    complex_t m;
    double scale;
};

inline Scaled scaled_sinc(complex_t z) {
    double x = z.real(), y = z.imag();
    double ay = std::fabs(y);
    if (std::abs(z) < 1e-4) {
        complex_t z2 = z * z;
        return {1.0 - z2 / 6.0 + z2 * z2 / 120.0, 0.0};
    }
    if (ay < 30.0) return {std::sin(z) / z, 0.0};
    // sin(x+iy) = e^{|y|} [ sin x (1+e^{-2|y|})/2 + i sgn(y) cos x (1-e^{-2|y|})/2 ]
    double e2 = std::exp(-2.0 * ay);
    complex_t num(std::sin(x) * 0.5 * (1.0 + e2),
                  (y > 0 ? 1.0 : -1.0) * std::cos(x) * 0.5 * (1.0 - e2));
    return {num / z, ay};
}

}  // namespace detail

// h_{a,Delta}(s): entire majorant of f_a of exponential type 2*pi*Delta.
// Evaluated as  a (pi Delta)^2 sinc(pi D (s+ia)) sinc(pi D (s-ia)) / sinh^2(pi a D),
// which is finite at the removable points s = +-ia and stable in log scale.
inline complex_t majorant_h(const MajorantParams& p, complex_t s) {
    const double c = kPi * p.a * p.delta;
    if (std::fabs(s.imag()) * kTwoPi * p.delta > 700.0)
        throw overflow_error("majorant_h: |Im s| * 2 pi Delta > 700");
    const complex_t ia(0.0, p.a);
    auto s1 = detail::scaled_sinc(kPi * p.delta * (s + ia));
    auto s2 = detail::scaled_sinc(kPi * p.delta * (s - ia));
    // 1/sinh^2(c) = 4 e^{-2c} / (1-e^{-2c})^2
    double em = -std::expm1(-2.0 * c);  // 1 - e^{-2c}
    double logsinh2 = 2.0 * c - std::log(4.0 / (em * em));
    double expo = s1.scale + s2.scale - logsinh2;
    complex_t m = p.a * kPi * kPi * p.delta * p.delta * s1.m * s2.m;
    if (expo > 700.0) throw overflow_error("majorant_h: scale overflow");
    return m * std::exp(expo);
}

inline double majorant_h_real(const MajorantParams& p, double u) {
    return majorant_h(p, complex_t(u, 0.0)).real();
}

// Exact Fourier transform via the Poisson-kernel pair fhat_a = pi e^{-2pi a |xi|}:
//   hhat(xi) = pi [ c0 e^{-2pi a |xi|} - c1 e^{-2pi a Delta} cosh(2pi a xi) ],
// c0 = cosh(2c)/(2 sinh^2 c), c1 = 1/(2 sinh^2 c); zero outside [-Delta, Delta].
// This is the fast path used inside the explicit-formula prime sums; the
// quadrature route below validates it.
inline double majorant_h_hat_pair(const MajorantParams& p, double xi) {
    double axi = std::fabs(xi);
    if (axi >= p.delta) return 0.0;
    const double c = kPi * p.a * p.delta;
    const double sh2 = std::sinh(c) * std::sinh(c);
    const double c0 = std::cosh(2.0 * c) / (2.0 * sh2);
    const double c1 = 1.0 / (2.0 * sh2);
    return kPi * (c0 * std::exp(-kTwoPi * p.a * axi) -
                  c1 * std::exp(-kTwoPi * p.a * p.delta) *
                      std::cosh(kTwoPi * p.a * xi));
}

namespace detail {

// complement pi/2 - Si(x) for x >= 0
inline double si_complement(double x) {
    if (x < 4.0) {
        // Si series
        double si = 0.0, term = x;
        double x2 = x * x;
        for (int k = 0; k < 24; ++k) {
            int n = 2 * k + 1;
            si += term / n;
            term *= -x2 / ((n + 1.0) * (n + 2.0));
            if (std::fabs(term) < 1e-18) break;
        }
        return kPi / 2.0 - si;
    }
    // asymptotic: f(x)cos x + g(x) sin x
    double x2 = x * x;
    double f = (1.0 - 2.0 / x2 + 24.0 / (x2 * x2) - 720.0 / (x2 * x2 * x2)) / x;
    double g = (1.0 - 6.0 / x2 + 120.0 / (x2 * x2) - 5040.0 / (x2 * x2 * x2)) / x2;
    return f * std::cos(x) + g * std::sin(x);
}

// 2 * Int_U^inf f_a(u) cos(2 pi w u) du  with an analytic a/u^2 principal
// part; the neglected (f_a - a/u^2) piece is returned as an error bound.
struct TailPart {
    double value;
    double err;
};

inline TailPart poisson_cos_tail(double a, double w, double U) {
    double err = 2.0 * a * a * a / (3.0 * U * U * U);
    if (w == 0.0) return {2.0 * std::atan2(a, U), 0.0};
    double alpha = kTwoPi * w;
    double x = alpha * U;
    double val = 2.0 * a * (std::cos(x) / U - alpha * si_complement(x));
    return {val, err};
}

}  // namespace detail

// Fourier transform of h by quadrature (general a), pinned to the known
// support [-Delta, Delta]. For a = 1/2 the closed form
//   pi (e^{pi(D-|xi|)} - e^{-pi(D-|xi|)}) / (e^{pi D} (1-e^{-pi D})^2)
// is used directly.
inline double majorant_h_hat(const MajorantParams& p, double xi) {
    double axi = std::fabs(xi);
    if (axi >= p.delta) return 0.0;
    if (p.a == 0.5) {
        double pd = kPi * p.delta, px = kPi * (p.delta - axi);
        double em = -std::expm1(-pd);
        return kPi * (std::exp(px) - std::exp(-px)) / (std::exp(pd) * em * em);
    }
    const double a = p.a, D = p.delta;
    const double c = kPi * a * D;
    const double sh2 = std::sinh(c) * std::sinh(c);
    const double c0 = std::cosh(2.0 * c) / (2.0 * sh2);
    const double c1 = 1.0 / (2.0 * sh2);
    const double U = std::max(2000.0 * a, 200.0);

    // body: 2 Int_0^U h(u) cos(2 pi xi u) du, sliced below the oscillation scale
    auto integrand = [&](double u) {
        return majorant_h_real(p, u) * std::cos(kTwoPi * axi * u);
    };
    double w = 0.25 / (D + axi + 0.5);
    KahanSum body;
    double esterr = 0.0;
    double lo = 0.0;
    while (lo < U) {
        double hi = std::min(lo + std::max(w, 1e-3), U);
        QuadResult q = integrate(integrand, lo, hi, 1e-13, 64);
        body += 2.0 * q.value;
        esterr += q.est_error;
        lo = hi;
    }
    // analytic tails of the c0/c1 pieces beyond U
    auto t0 = detail::poisson_cos_tail(a, axi, U);
    auto tm = detail::poisson_cos_tail(a, std::fabs(D - axi), U);
    auto tp = detail::poisson_cos_tail(a, D + axi, U);
    double tail = c0 * t0.value - 0.5 * c1 * (tm.value + tp.value);
    esterr += c0 * t0.err + 0.5 * c1 * (tm.err + tp.err);
    if (esterr > 1e-7)
        throw precision_error("majorant_h_hat: quadrature error too large");
    return body.value() + tail;
}

}  // namespace explicitlb
