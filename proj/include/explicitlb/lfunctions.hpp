#pragma once

#include <cmath>
#include <complex>

#include "explicitlb/characters.hpp"
#include "explicitlb/constants.hpp"
#include "explicitlb/hurwitz.hpp"
#include "explicitlb/lambda_table.hpp"

namespace explicitlb {

// L(s, chi) = q^(-s) sum_{a mod q} chi(a) zeta(s, a/q), chi nonprincipal.
inline EvaluationResult l_value(complex_t s, const DirichletCharacter& chi) {
    if (chi.is_principal())
        throw domain_error("l_value: principal character");
    const double q = static_cast<double>(chi.modulus());
    complex_t sum(0.0, 0.0);
    double err = 0.0;
    if (std::abs(s - complex_t(1.0, 0.0)) < 1e-6) {
        // Laurent route: the poles of zeta(s, a/q) cancel since sum chi = 0
        for (std::uint64_t a = 1; a <= chi.modulus(); ++a) {
            complex_t c = chi.evaluate(static_cast<std::int64_t>(a));
            if (c == complex_t(0.0, 0.0)) continue;
            sum += c * generalized_stieltjes(0, a / q);
        }
        return {sum / q, 1e-14 * std::abs(sum / q) + 1e-16,
                EvalMethod::stieltjes_laurent};
    }
    for (std::uint64_t a = 1; a <= chi.modulus(); ++a) {
        complex_t c = chi.evaluate(static_cast<std::int64_t>(a));
        if (c == complex_t(0.0, 0.0)) continue;
        EvaluationResult h = hurwitz_zeta(s, a / q);
        sum += c * h.value;
        err += h.est_error;
    }
    complex_t qs = std::exp(-s * std::log(q));
    return {qs * sum, err * std::abs(qs), EvalMethod::hurwitz_euler_maclaurin};
}

// L'(s, chi) = -log q * L + q^(-s) sum chi(a) zeta_s(s, a/q).
inline EvaluationResult l_derivative(complex_t s, const DirichletCharacter& chi) {
    if (chi.is_principal())
        throw domain_error("l_derivative: principal character");
    const double q = static_cast<double>(chi.modulus());
    const double logq = std::log(q);
    if (std::abs(s - complex_t(1.0, 0.0)) < 1e-6) {
        // L'(1,chi) = -log q * L(1,chi) - q^(-1) sum chi(a) gamma1(a/q)
        complex_t s0(0.0, 0.0), s1(0.0, 0.0);
        for (std::uint64_t a = 1; a <= chi.modulus(); ++a) {
            complex_t c = chi.evaluate(static_cast<std::int64_t>(a));
            if (c == complex_t(0.0, 0.0)) continue;
            s0 += c * generalized_stieltjes(0, a / q);
            s1 += c * generalized_stieltjes(1, a / q);
        }
        complex_t v = -logq * s0 / q - s1 / q;
        return {v, 1e-13 * std::abs(v) + 1e-16, EvalMethod::stieltjes_laurent};
    }
    EvaluationResult lv = l_value(s, chi);
    complex_t sum(0.0, 0.0);
    double err = 0.0;
    for (std::uint64_t a = 1; a <= chi.modulus(); ++a) {
        complex_t c = chi.evaluate(static_cast<std::int64_t>(a));
        if (c == complex_t(0.0, 0.0)) continue;
        EvaluationResult h = hurwitz_zeta_ds(s, a / q);
        sum += c * h.value;
        err += h.est_error;
    }
    complex_t qs = std::exp(-s * std::log(q));
    return {-logq * lv.value + qs * sum,
            logq * lv.est_error + err * std::abs(qs),
            EvalMethod::hurwitz_euler_maclaurin};
}

// L'/L(sigma, chi) on the real segment [1/2 + delta, 3/2].
inline EvaluationResult log_deriv_L(double sigma, const DirichletCharacter& chi) {
    if (chi.is_principal())
        throw domain_error("log_deriv_L: principal character");
    if (!(sigma >= 0.5 + 1e-4 && sigma <= 1.5))
        throw domain_error("log_deriv_L: sigma outside [1/2+delta, 3/2]");
    complex_t s(sigma, 0.0);
    EvaluationResult num = l_derivative(s, chi);
    EvaluationResult den =
        std::fabs(sigma - 1.0) < 1e-6
            ? l_value(complex_t(1.0, 0.0), chi)
            : l_value(s, chi);
    if (std::abs(den.value) < 1e-10)
        throw near_zero_error("log_deriv_L: |L| below 1e-10");
    complex_t v = num.value / den.value;
    double err = (num.est_error + std::abs(v) * den.est_error) / std::abs(den.value);
    return {v, err, num.method};
}

// Truncated Dirichlet series  -sum_{n<=N} Lambda(n) chi(n) n^(-sigma),
// the independent route used by the two-method agreement checks.
inline EvaluationResult log_deriv_L_series(double sigma,
                                           const DirichletCharacter& chi,
                                           const LambdaTable& table) {
    if (chi.is_principal())
        throw domain_error("log_deriv_L_series: principal character");
    const auto& pp = table.prime_powers();
    const auto& lam = table.lambda_values();
    complex_t acc(0.0, 0.0);
    for (std::size_t i = 0; i < pp.size(); ++i) {
        complex_t c = chi.evaluate(static_cast<std::int64_t>(pp[i]));
        if (c == complex_t(0.0, 0.0)) continue;
        acc += lam[i] * c * std::pow(static_cast<double>(pp[i]), -sigma);
    }
    double N = static_cast<double>(table.limit());
    // tail estimate: integral of u^(-sigma) dpsi(u) with psi ~ u plus the
    // conditional fluctuation envelope
    double tail = sigma > 1.0 ? std::pow(N, 1.0 - sigma) / (sigma - 1.0)
                              : std::pow(N, 1.0 - sigma) * std::log(N);
    double logN = std::log(N);
    tail += (1.0 + sigma / (sigma - 0.5)) * logN * logN *
            std::pow(N, 0.5 - sigma) / (8.0 * kPi);
    return {-acc, tail, EvalMethod::dirichlet_series};
}

// zeta'/zeta(1+it) by Euler-Maclaurin (zeta(s,1) and its derivative).
inline EvaluationResult zeta_logderiv_one_line(double t) {
    if (!(std::fabs(t) >= 1.0))
        throw domain_error("zeta_logderiv_one_line: |t| >= 1 required");
    if (std::fabs(t) > 1e4)
        throw precision_error("zeta_logderiv_one_line: |t| > 1e4 window");
    complex_t s(1.0, t);
    EvaluationResult num = hurwitz_zeta_ds(s, 1.0);
    EvaluationResult den = hurwitz_zeta(s, 1.0);
    complex_t v = num.value / den.value;
    double err = (num.est_error + std::abs(v) * den.est_error) / std::abs(den.value);
    return {v, err, EvalMethod::hurwitz_euler_maclaurin};
}

// b(chi) = -L'/L(1, conj(chi)) - log(q/2pi) + gamma.
inline EvaluationResult b_chi(const DirichletCharacter& chi) {
    if (!chi.is_primitive() || chi.is_principal())
        throw domain_error("b_chi: primitive nonprincipal character required");
    EvaluationResult ld = log_deriv_L(1.0, chi.conjugate());
    double q = static_cast<double>(chi.modulus());
    complex_t v = -ld.value - std::log(q / kTwoPi) + kEulerGamma;
    return {v, ld.est_error, ld.method};
}

}  // namespace explicitlb
