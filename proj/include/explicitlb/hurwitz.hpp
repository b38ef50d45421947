#pragma once

#include <cmath>
#include <complex>

#include "explicitlb/errors.hpp"
#include "explicitlb/special.hpp"

namespace explicitlb {

enum class EvalMethod {
    dirichlet_series,
    hurwitz_euler_maclaurin,
    stieltjes_laurent,
};

struct EvaluationResult {
    complex_t value{0.0, 0.0};
    double est_error = 0.0;  // heuristic first-omitted-term bound
    EvalMethod method = EvalMethod::hurwitz_euler_maclaurin;
};

namespace detail {

inline int hurwitz_offset(const complex_t& s) {
    double t = std::fabs(s.imag());
    return static_cast<int>(std::ceil(std::max(24.0, 2.2 * t / kTwoPi + 24.0)));
}

}  // namespace detail

// zeta(s, w) = sum_{n>=0} (n+w)^(-s) by Euler-Maclaurin. Valid here for
// Re s > 0 away from s = 1; w in (0, 1].
inline EvaluationResult hurwitz_zeta(complex_t s, double w) {
    if (!(w > 0.0 && w <= 1.0)) throw domain_error("hurwitz_zeta: w in (0,1]");
    if (std::abs(s - complex_t(1.0, 0.0)) < 1e-6)
        throw pole_error("hurwitz_zeta: s too close to the pole at 1");
    if (s.real() <= 0.0)
        throw domain_error("hurwitz_zeta: Re s must be positive");

    const int M = detail::hurwitz_offset(s);
    complex_t sum(0.0, 0.0);
    for (int n = 0; n < M; ++n) sum += std::exp(-s * std::log(n + w));
    const double Mw = M + w;
    const double L = std::log(Mw);
    const complex_t tail0 = std::exp((1.0 - s) * L) / (s - 1.0);
    const complex_t half = 0.5 * std::exp(-s * L);

    const double* bern = detail::bernoulli_over_fact();
    complex_t poch = s;                       // (s)_1
    complex_t np = std::exp(-(s + 1.0) * L);  // (M+w)^(-s-1)
    complex_t corr(0.0, 0.0);
    double last = 0.0;
    for (int k = 1; k <= 40; ++k) {
        complex_t term = bern[k] * poch * np;
        corr += term;
        last = std::abs(term);
        if (last < 1e-18 * (std::abs(sum) + 1.0)) break;
        poch *= (s + (2.0 * k - 1.0)) * (s + (2.0 * k));
        np /= Mw * Mw;
    }
    return {sum + tail0 + half + corr, last + 1e-16 * std::abs(sum),
            EvalMethod::hurwitz_euler_maclaurin};
}

// d/ds zeta(s, w), same scheme differentiated term by term.
inline EvaluationResult hurwitz_zeta_ds(complex_t s, double w) {
    if (!(w > 0.0 && w <= 1.0)) throw domain_error("hurwitz_zeta_ds: w in (0,1]");
    if (std::abs(s - complex_t(1.0, 0.0)) < 1e-6)
        throw pole_error("hurwitz_zeta_ds: s too close to the pole at 1");

    const int M = detail::hurwitz_offset(s);
    complex_t sum(0.0, 0.0);
    for (int n = 0; n < M; ++n) {
        double ln = std::log(n + w);
        sum += -ln * std::exp(-s * ln);
    }
    const double Mw = M + w;
    const double L = std::log(Mw);
    const complex_t sm1 = s - 1.0;
    const complex_t Mpow = std::exp((1.0 - s) * L);  // (M+w)^(1-s)
    const complex_t tail0 = -L * Mpow / sm1 - Mpow / (sm1 * sm1);
    const complex_t half = -0.5 * L * std::exp(-s * L);

    const double* bern = detail::bernoulli_over_fact();
    complex_t poch = s, dpoch(1.0, 0.0);
    complex_t np = std::exp(-(s + 1.0) * L);
    complex_t corr(0.0, 0.0);
    double last = 0.0;
    for (int k = 1; k <= 40; ++k) {
        complex_t term = bern[k] * (dpoch * np - poch * L * np);
        corr += term;
        last = std::abs(term);
        if (last < 1e-18 * (std::abs(sum) + 1.0)) break;
        complex_t f1 = s + (2.0 * k - 1.0), f2 = s + (2.0 * k);
        dpoch = dpoch * f1 * f2 + poch * (f1 + f2);
        poch *= f1 * f2;
        np /= Mw * Mw;
    }
    return {sum + tail0 + half + corr, last + 1e-16 * std::abs(sum),
            EvalMethod::hurwitz_euler_maclaurin};
}

// Laurent coefficients of zeta(s, w) at s = 1:
//   zeta(s,w) = 1/(s-1) + gamma0(w) - gamma1(w)(s-1) + ...
// gamma0(w) = -digamma(w); gamma1 from the differentiated Euler-Maclaurin
// expansion at s = 1.
inline double generalized_stieltjes(int order, double w) {
    if (!(w > 0.0 && w <= 1.0))
        throw domain_error("generalized_stieltjes: w in (0,1]");
    if (order == 0) return -digamma(w);
    if (order != 1) throw domain_error("generalized_stieltjes: order in {0,1}");

    const int M = 32;
    double sum = 0.0;
    for (int n = 0; n < M; ++n) {
        double ln = std::log(n + w);
        sum += ln / (n + w);
    }
    const double Mw = M + w;
    const double L = std::log(Mw);
    double g1 = sum - 0.5 * L * L + 0.5 * L / Mw;
    // Bernoulli corrections: -sum_k B2k/(2k) (H_{2k-1} - L) (M+w)^(-2k)
    double H = 0.0, mp = 1.0;
    for (int k = 1; k <= 12; ++k) {
        H += 1.0 / (2.0 * k - 1.0);
        if (k > 1) H += 1.0 / (2.0 * k - 2.0);
        mp /= Mw * Mw;
        double term = detail::kBernoulli2k[k - 1] / (2.0 * k) * (H - L) * mp;
        g1 -= term;
        if (std::fabs(term) < 1e-18) break;
    }
    return g1;
}

}  // namespace explicitlb
