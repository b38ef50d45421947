#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <optional>

#include "explicitlb/bandlimited.hpp"
#include "explicitlb/characters.hpp"
#include "explicitlb/kahan.hpp"
#include "explicitlb/lambda_table.hpp"
#include "explicitlb/quadrature.hpp"
#include "explicitlb/special.hpp"
#include "explicitlb/zero_dataset.hpp"

namespace explicitlb {

// Envelope constant for omitted-zero tails: h(u) <= coth^2(pi a Delta) f_a(u)
// everywhere, and coth^2 <= 1.725 once pi*a*Delta >= 1.
inline double majorant_envelope(const MajorantParams& p) {
    double c = 1.0 / std::tanh(kPi * p.a * p.delta);
    return c * c;
}

// Zero-density working estimate log(T/2pi)/(2pi) per unit height, used
// for truncation-tail accounting. Reported separately, never silently
// added to a value.
inline double zero_density(double T) {
    return std::log(T / kTwoPi) / kTwoPi;
}

struct ZeroSideResult {
    double value = 0.0;       // sum over +-gamma <= height of h(shift -+ gamma)
    double tail_bound = 0.0;  // envelope bound for the omitted zeros
};

// sum over the dataset (symmetrized over +-gamma) of h(shift - gamma),
// plus a density-envelope bound for the zeros above the dataset height.
inline ZeroSideResult zero_side(const MajorantParams& p, double shift,
                                const ZeroDataset& zeros) {
    ZeroSideResult out;
    if (zeros.ordinates.empty()) {
        out.tail_bound = std::numeric_limits<double>::infinity();
        return out;
    }
    KahanSum acc;
    for (double g : zeros.ordinates) {
        acc += majorant_h_real(p, shift - g);
        acc += majorant_h_real(p, shift + g);
    }
    out.value = acc.value();

    const double H = zeros.height;
    const double env = majorant_envelope(p);
    auto density_f = [&](double T) {
        return (f_kernel(p.a, shift - T) + f_kernel(p.a, shift + T)) *
               zero_density(T);
    };
    // integrand ~ a log T / T^2; envelope tail of the dyadic scheme
    auto tail_env = [&](double X) {
        return 2.0 * p.a * (std::log(X / kTwoPi) + 1.0) / (kTwoPi * X) * 2.0;
    };
    QuadResult q = integrate_to_inf(density_f, H, tail_env, 1e-12);
    out.tail_bound = env * (q.value + q.est_error);
    return out;
}

// Symmetrization consistency path: explicit signed ordinates.
inline double zero_side_signed(const MajorantParams& p, double shift,
                               const std::vector<double>& signed_ordinates) {
    KahanSum acc;
    for (double g : signed_ordinates) acc += majorant_h_real(p, shift - g);
    return acc.value();
}

// Archimedean + prime side of the Guinand-Weil identity for the shifted
// test function u -> h(shift - u), split into its displayed terms.
struct ArchPrimeSide {
    double principal_term = 0.0;   // 2 Re h(shift - i/2)   (zeta only)
    double conductor_term = 0.0;   // (1/2pi) log(q/pi) hhat(0)  (dirichlet)
    double pi_term = 0.0;          // -(log pi / 2pi) hhat(0)    (zeta)
    double gamma_integral = 0.0;   // (1/2pi) Int h Re Gamma'/Gamma
    double prime_sum = 0.0;        // -(1/pi) sum Lambda(n)/sqrt(n) ...
    double quadrature_error = 0.0;

    double total() const {
        return principal_term + conductor_term + pi_term + gamma_integral +
               prime_sum;
    }
};

namespace detail {

// (1/2pi) Int h(shift-u) Re Gamma'/Gamma(c0 + iu/2) du over the real line.
// Writing h(v) = A f_a(v) - B f_a(v) cos(2 pi Delta v) (A, B from the
// bracket of the majorant), the Poisson part integrates dyadically with
// an f_a envelope and the oscillatory part over a finite window with
// integration-by-parts boundary terms beyond it.
inline QuadResult gamma_term_integral(const MajorantParams& p, double shift,
                                      double c0) {
    const double a = p.a, D = p.delta;
    const double c = kPi * a * D;
    const double sh2 = std::sinh(c) * std::sinh(c);
    const double A = std::cosh(2.0 * c) / (2.0 * sh2);
    const double B = 1.0 / (2.0 * sh2);

    // Psi(u) = Re digamma(c0 + iu/2) and its u-derivative, as functions
    // of v = shift - u.
    auto Psi = [&](double v) { return re_digamma_half(c0, shift - v); };
    auto dPsi_dv = [&](double v) {
        // d/dv Re psi(c0 + i(shift-v)/2) = +Im(psi'(c0+i(shift-v)/2))/2
        return 0.5 * trigamma(complex_t(c0, 0.5 * (shift - v))).imag();
    };

    QuadResult out;

    // --- Poisson part: A * Int f_a(v) Psi(shift - v) dv (smooth) ---
    auto fp = [&](double v) { return f_kernel(a, v) * Psi(v); };
    QuadResult center = integrate(fp, -a, a, 1e-13);
    out.value += center.value;
    out.est_error += center.est_error;
    auto env_right = [&](double X) {
        return a / X * (std::log(2.0 + 0.5 * (std::fabs(shift) + X)) + 2.0);
    };
    auto pr = integrate_to_inf(fp, a, env_right, 1e-12);
    auto pl = integrate_to_inf([&](double v) { return fp(-v); }, a,
                               env_right, 1e-12);
    out.value += pr.value + pl.value;
    out.est_error += pr.est_error + pl.est_error;
    out.value *= A;
    out.est_error *= A;

    // --- oscillatory part: -B * Int f_a(v) cos(2 pi D v) Psi(shift-v) dv ---
    const double W = std::max(64.0 * a, 2000.0);
    const double alpha = kTwoPi * D;
    auto fo = [&](double v) {
        return f_kernel(a, v) * std::cos(alpha * v) * Psi(v);
    };
    double slice = 0.25 / D;
    KahanSum osc;
    double err = 0.0;
    double lo = -W;
    while (lo < W) {
        double hi = std::min(lo + slice, W);
        QuadResult q = integrate(fo, lo, hi, 1e-14, 48);
        osc += q.value;
        err += q.est_error;
        lo = hi;
    }
    // boundary terms: Int_W^inf G cos(alpha v) dv with G = f_a Psi, twice
    // by parts; same on the left via v -> -v.
    auto G = [&](double v) { return f_kernel(a, v) * Psi(v); };
    auto Gp = [&](double v) {
        double d = v * v + a * a;
        return -2.0 * a * v / (d * d) * Psi(v) + f_kernel(a, v) * dPsi_dv(v);
    };
    double psimax = std::fabs(Psi(-W)) + std::fabs(Psi(W)) + 2.0;
    double ibp_rem = 8.0 * a * psimax / (W * W * W * alpha * alpha);
    double tr = -G(W) * std::sin(alpha * W) / alpha -
                Gp(W) * std::cos(alpha * W) / (alpha * alpha);
    // left: Int_{-inf}^{-W} G cos = Int_W^inf G(-v) cos(alpha v) dv
    auto Gm = [&](double v) { return G(-v); };
    auto Gmp = [&](double v) { return -Gp(-v); };
    double tl = -Gm(W) * std::sin(alpha * W) / alpha -
                Gmp(W) * std::cos(alpha * W) / (alpha * alpha);
    double osc_total = osc.value() + tr + tl;
    err += 2.0 * ibp_rem;

    out.value -= B * osc_total;
    out.est_error += B * err;

    out.value /= kTwoPi;
    out.est_error /= kTwoPi;
    return out;
}

}  // namespace detail

// Zeta display of the explicit formula, shifted test function.
inline ArchPrimeSide arch_prime_side(const MajorantParams& p, double shift,
                                     const LambdaTable& table) {
    double support = std::exp(kTwoPi * p.delta);
    if (static_cast<double>(table.limit()) < support)
        throw range_error("arch_prime_side: table limit below exp(2 pi Delta)");
    ArchPrimeSide out;
    double hhat0 = majorant_h_hat_pair(p, 0.0);
    out.principal_term = 2.0 * majorant_h(p, complex_t(shift, -0.5)).real();
    out.pi_term = -kLnPi / kTwoPi * hhat0;
    QuadResult g = detail::gamma_term_integral(p, shift, 0.25);
    out.gamma_integral = g.value;
    out.quadrature_error = g.est_error;
    const auto& pp = table.prime_powers();
    const auto& lam = table.lambda_values();
    KahanSum ps;
    for (std::size_t i = 0; i < pp.size() && pp[i] <= support; ++i) {
        double n = pp[i];
        double xi = std::log(n) / kTwoPi;
        double w = majorant_h_hat_pair(p, xi);
        if (w == 0.0) continue;
        ps += lam[i] / std::sqrt(n) * w * std::cos(shift * std::log(n));
    }
    out.prime_sum = -ps.value() / kPi;
    return out;
}

// Dirichlet display: conductor term, parity-shifted gamma factor, and
// Re{chi(n) e^{-i shift log n}} prime weights.
inline ArchPrimeSide arch_prime_side(const MajorantParams& p, double shift,
                                     const LambdaTable& table,
                                     const DirichletCharacter& chi) {
    double support = std::exp(kTwoPi * p.delta);
    if (static_cast<double>(table.limit()) < support)
        throw range_error("arch_prime_side: table limit below exp(2 pi Delta)");
    ArchPrimeSide out;
    double hhat0 = majorant_h_hat_pair(p, 0.0);
    double q = static_cast<double>(chi.modulus());
    out.conductor_term = std::log(q / kPi) / kTwoPi * hhat0;
    double c0 = 0.25 + 0.5 * chi.parity();
    QuadResult g = detail::gamma_term_integral(p, shift, c0);
    out.gamma_integral = g.value;
    out.quadrature_error = g.est_error;
    const auto& pp = table.prime_powers();
    const auto& lam = table.lambda_values();
    KahanSum ps;
    for (std::size_t i = 0; i < pp.size() && pp[i] <= support; ++i) {
        double n = pp[i];
        double xi = std::log(n) / kTwoPi;
        double w = majorant_h_hat_pair(p, xi);
        if (w == 0.0) continue;
        complex_t cv = chi.evaluate(static_cast<std::int64_t>(pp[i]));
        if (cv == complex_t(0.0, 0.0)) continue;
        complex_t rot = std::polar(1.0, -shift * std::log(n));
        ps += lam[i] / std::sqrt(n) * w * (cv * rot).real();
    }
    out.prime_sum = -ps.value() / kPi;
    return out;
}

struct TailedValue {
    double value = 0.0;
    double tail = 0.0;
};

// sum over +-gamma of 1/(1/4 + gamma^2) with a density tail estimate;
// converges to 2 + gamma - log(4 pi).
inline TailedValue zero_reciprocal_sum(const ZeroDataset& zeros) {
    if (zeros.kind != ZeroKind::zeta)
        throw domain_error("zero_reciprocal_sum: zeta dataset required");
    KahanSum acc;
    for (double g : zeros.ordinates) acc += 2.0 / (0.25 + g * g);
    double H = zeros.height;
    TailedValue out;
    out.value = acc.value();
    if (H > 0) {
        auto f = [&](double T) { return 2.0 / (0.25 + T * T) * zero_density(T); };
        auto tail_env = [&](double X) {
            return 2.0 * (std::log(X / kTwoPi) + 1.0) / (kTwoPi * X);
        };
        QuadResult q = integrate_to_inf(f, H, tail_env, 1e-13);
        out.tail = q.value + q.est_error;
    } else {
        out.tail = std::numeric_limits<double>::infinity();
    }
    return out;
}

// sum of f_{1/2}(t - gamma) over +-gamma with a density tail; exploratory
// comparison against 0.5 log t + 2 log log t happens in the caller.
inline TailedValue f_half_zero_sum(double t, const ZeroDataset& zeros) {
    if (zeros.kind != ZeroKind::zeta)
        throw domain_error("f_half_zero_sum: zeta dataset required");
    if (!(t <= 0.5 * zeros.height))
        throw coverage_error("f_half_zero_sum: need t <= height/2");
    KahanSum acc;
    for (double g : zeros.ordinates) {
        acc += f_kernel(0.5, t - g);
        acc += f_kernel(0.5, t + g);
    }
    double H = zeros.height;
    auto f = [&](double T) {
        return (f_kernel(0.5, t - T) + f_kernel(0.5, t + T)) * zero_density(T);
    };
    auto tail_env = [&](double X) {
        return (std::log(X / kTwoPi) + 1.0) / (kTwoPi * X) * 2.0;
    };
    QuadResult q = integrate_to_inf(f, H, tail_env, 1e-12);
    return {acc.value(), q.value + q.est_error};
}

}  // namespace explicitlb
