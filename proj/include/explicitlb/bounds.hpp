#pragma once

#include <cmath>
#include <string>

#include "explicitlb/bound_report.hpp"
#include "explicitlb/constants.hpp"
#include "explicitlb/errors.hpp"

namespace explicitlb {

// Everything here is parameterized by log q (or log t): the theorems live
// at magnitudes up to 10^400, where q itself is not representable but
// log q = k log 10 is exact enough. Wrappers taking q are provided.

namespace magnitudes {

inline double log_of_decade(int k) { return k * kLn10; }

// Parse "1e330", "10^330", "330" (a decade exponent), or a plain real,
// returning log q without overflow.
inline double parse_log(const std::string& text) {
    auto caret = text.find('^');
    if (caret != std::string::npos) {
        double base = std::stod(text.substr(0, caret));
        double expo = std::stod(text.substr(caret + 1));
        return expo * std::log(base);
    }
    auto e = text.find_first_of("eE");
    if (e != std::string::npos) {
        double mant = std::stod(text.substr(0, e));
        double expo = std::stod(text.substr(e + 1));
        if (mant <= 0) throw domain_error("magnitude mantissa must be positive");
        return std::log(mant) + expo * kLn10;
    }
    double v = std::stod(text);
    if (v <= 0) throw domain_error("magnitude must be positive");
    return std::log(v);
}

}  // namespace magnitudes

inline constexpr double kLogQMin = 30 * kLn10;  // theorems start at 10^30

namespace detail {

inline void require_q_range(double logq, const char* who) {
    if (logq < kLogQMin * (1.0 - 1e-12))
        throw domain_error(std::string(who) + ": requires q >= 10^30");
}

inline void require_thm13_sigma(double sigma, double logq, const char* who) {
    double L = std::log(logq);
    if (sigma < 0.5 + 1.0 / L - 1e-12 || sigma > 1.0 - 1.0 / L + 1e-12)
        throw domain_error(std::string(who) +
                           ": sigma outside [1/2 + 1/loglog q, 1 - 1/loglog q]");
}

}  // namespace detail

// B_{sigma,lambda} = (2s-1)(1 - exp(-2l(1-s)/(2s-1))) / (2l(1-s)^2).
// Continuous limit 0 as sigma -> 1/2+.
inline double B_sigma_lambda(double sigma, double lambda) {
    if (!(lambda > 0)) throw domain_error("B_sigma_lambda: lambda > 0");
    if (sigma < 0.5 || sigma >= 1.0)
        throw domain_error("B_sigma_lambda: sigma in [1/2, 1)");
    if (sigma == 0.5) return 0.0;
    double om = 1.0 - sigma, tm = 2.0 * sigma - 1.0;
    return tm * (-std::expm1(-2.0 * lambda * om / tm)) /
           (2.0 * lambda * om * om);
}

// A_sigma = B_{sigma,3/4} + 2.079 (the final constant rounds
// (2/3)(e^{3/4}+1) up).
inline double A_sigma(double sigma) {
    if (!(sigma > 0.5 && sigma < 1.0))
        throw domain_error("A_sigma: sigma strictly inside (1/2, 1)");
    return B_sigma_lambda(sigma, 0.75) + 2.079;
}

// Prime-sum bound at sigma = 1:
// 2 loglog q - gamma - lambda + ((e^l-1)(2l+1)/(2 pi l)) (loglog q)^2/log q
//   + 0.24 e^l / log q.
inline BoundReport prime_sum_bound_sigma1_log(double logq, double lambda) {
    BoundReport r;
    r.what = "prime_sum_sigma1";
    double x = std::exp(-2.0 * lambda) * logq * logq;
    double y = std::exp(2.0 * lambda);
    if (!(x >= 60.0))
        throw domain_error("prime_sum_bound_sigma1: x = e^{-2l} log^2 q >= 60 fails");
    if (!(y >= 2.0))
        throw domain_error("prime_sum_bound_sigma1: y = e^{2l} >= 2 fails");
    double L = std::log(logq);
    double el = std::exp(lambda);
    r.inputs = {{"log_q", logq}, {"lambda", lambda}, {"x", x}, {"y", y}};
    r.terms.push_back({"2loglogq", "main", 2.0 * L});
    r.terms.push_back({"-gamma", "main", -kEulerGamma});
    r.terms.push_back({"-lambda", "main", -lambda});
    double coef = (el - 1.0) * (2.0 * lambda + 1.0) / (kTwoPi * lambda);
    r.terms.push_back({"LL2_over_logq", "secondary", coef * L * L / logq});
    r.terms.push_back({"sqrtx", "secondary", 0.24 * el / logq});
    double tot = 0;
    for (auto& t : r.terms) tot += t.value;
    r.total = tot;
    r.validity_note = "theorem range q >= 10^30; x >= 60";
    return r;
}
inline BoundReport prime_sum_bound_sigma1(double q, double lambda) {
    return prime_sum_bound_sigma1_log(std::log(q), lambda);
}

// Prime-sum bound for 1/2 < sigma < 1:
// B (log q)^{2-2s} - s 2^{1-s}/(1-s) + s LL^2/(2^{s-1/2} pi (2s-1))
//   + (2s/(2s-1) + 1/l)((e^l-1)/2pi) LL^2 (log q)^{1-2s}.
inline BoundReport prime_sum_bound_log(double sigma, double logq,
                                       double lambda) {
    detail::require_q_range(logq, "prime_sum_bound");
    detail::require_thm13_sigma(sigma, logq, "prime_sum_bound");
    double y = std::exp(lambda / (sigma - 0.5));
    double x = logq * logq / y;
    if (!(x >= 60.0)) throw domain_error("prime_sum_bound: x >= 60 fails");
    if (!(y >= 2.0)) throw domain_error("prime_sum_bound: y >= 2 fails");
    double L = std::log(logq);
    double el = std::exp(lambda);
    BoundReport r;
    r.what = "prime_sum";
    r.inputs = {{"sigma", sigma}, {"log_q", logq}, {"lambda", lambda}};
    r.terms.push_back(
        {"B_term", "B", B_sigma_lambda(sigma, lambda) *
                            std::pow(logq, 2.0 - 2.0 * sigma)});
    r.terms.push_back(
        {"negative", "partial-summation",
         -sigma * std::pow(2.0, 1.0 - sigma) / (1.0 - sigma)});
    r.terms.push_back(
        {"LL2", "fluctuation",
         sigma * L * L / (std::pow(2.0, sigma - 0.5) * kPi * (2.0 * sigma - 1.0))});
    r.terms.push_back(
        {"LL2_decay", "fluctuation",
         (2.0 * sigma / (2.0 * sigma - 1.0) + 1.0 / lambda) *
             ((el - 1.0) / kTwoPi) * L * L *
             std::pow(logq, 1.0 - 2.0 * sigma)});
    double tot = 0;
    for (auto& t : r.terms) tot += t.value;
    r.total = tot;
    r.validity_note = "range: 1/2 + 1/LL <= sigma <= 1 - 1/LL, q >= 10^30";
    return r;
}
inline BoundReport prime_sum_bound(double sigma, double q, double lambda) {
    return prime_sum_bound_log(sigma, std::log(q), lambda);
}

// Zero-sum bound at sigma = 1: intermediate and final displays, with the
// margin final - intermediate (must be >= 0 on the valid range).
inline BoundReport zero_sum_bound_sigma1_log(double logq) {
    detail::require_q_range(logq, "zero_sum_bound_sigma1");
    double L = std::log(logq);
    double logqpi = logq - kLnPi;
    double inter = (0.5 + 2.0 / (logq - 2.0)) * logqpi +
                   2.0 * std::pow(1.0 - 2.0 / logq, -2.0) * L;
    double fin = 0.5 * logqpi + 2.6 * L;
    BoundReport r;
    r.what = "zero_sum_sigma1";
    r.inputs = {{"log_q", logq}};
    r.terms.push_back({"intermediate", "pre-simplification", inter});
    r.terms.push_back({"final", "displayed", fin});
    r.total = fin;
    r.set_comparison(inter);
    r.validity_note = "margin = final - intermediate, must be >= 0 for q >= 10^30";
    if (r.slack < 0) r.flags.push_back("final-below-intermediate");
    return r;
}
inline BoundReport zero_sum_bound_sigma1(double q) {
    return zero_sum_bound_sigma1_log(std::log(q));
}

// alpha^2 beta: the pre-simplification coefficient of the sigma < 1
// zero-sum bound; displayed constant 1.338.
inline double zero_sum_alpha2beta() {
    double alpha = 1.0 / (-std::expm1(-2.0));
    double beta = 1.0 + 1.0 / (kLogQMin * kLogQMin);
    return alpha * alpha * beta;
}

// Zero-sum bound for the sigma range: (log q)/2 + 1.338 (log q)^{2-2s}/(1-s).
inline BoundReport zero_sum_bound_log(double sigma, double logq) {
    detail::require_q_range(logq, "zero_sum_bound");
    detail::require_thm13_sigma(sigma, logq, "zero_sum_bound");
    BoundReport r;
    r.what = "zero_sum";
    r.inputs = {{"sigma", sigma}, {"log_q", logq}};
    r.terms.push_back({"half_logq", "main", 0.5 * logq});
    r.terms.push_back({"band", "majorant",
                       1.338 / (1.0 - sigma) *
                           std::pow(logq, 2.0 - 2.0 * sigma)});
    r.total = r.terms[0].value + r.terms[1].value;
    double ab = zero_sum_alpha2beta();
    r.inputs.emplace_back("alpha2beta", ab);
    if (!(ab <= 1.338)) r.flags.push_back("alpha2beta-exceeds-1.338");
    if (1.0 - sigma < 1e-3) r.flags.push_back("divergent-as-sigma->1");
    r.validity_note = "pre-simplification constant alpha^2 beta <= 1.338";
    return r;
}
inline BoundReport zero_sum_bound(double sigma, double q) {
    return zero_sum_bound_log(sigma, std::log(q));
}

// Trivial-zero tail: 4.3 (s-1/2)(y^s + 1) / (lambda (log q)^{2s}).
inline double tail_bound_log(double sigma, double logq, double lambda) {
    if (!(sigma > 0.5 && sigma <= 1.0))
        throw domain_error("tail_bound: sigma in (1/2, 1]");
    if (!(lambda > 0)) throw domain_error("tail_bound: lambda > 0");
    double y = std::exp(lambda / (sigma - 0.5));
    return 4.3 * (sigma - 0.5) * (std::pow(y, sigma) + 1.0) /
           (lambda * std::pow(logq, 2.0 * sigma));
}
inline double tail_bound(double sigma, double q, double lambda) {
    return tail_bound_log(sigma, std::log(q), lambda);
}

inline constexpr double kLambdaStar = 2.1862;

// Full proof-display bracket of the q-aspect theorem at sigma = 1:
// 3.091 + 11.776/LL - 0.455/LL^2 + 78.906/(LL^2 log q), displayed values.
inline double thm11_bracket_displayed(double logq) {
    double L = std::log(logq);
    return 3.091 + 11.776 / L - 0.455 / (L * L) + 78.906 / (L * L * logq);
}

// The same bracket recomputed from lambda* = 2.1862 (the values the
// displayed constants round):
inline double thm11_bracket_computed(double logq) {
    double L = std::log(logq);
    double el = std::exp(kLambdaStar);
    double c1 = (el - 1.0) * (2.0 * kLambdaStar + 1.0) / (kTwoPi * kLambdaStar);
    double c2 = 2.6 * (el + 1.0) / kLambdaStar;
    double c3 = (el + 1.0) * kLnPi / (2.0 * kLambdaStar) - 0.24 * el;
    double c4 = 2.15 * (std::exp(2.0 * kLambdaStar) + 1.0) / kLambdaStar;
    return c1 + c2 / L - c3 / (L * L) + c4 / (L * L * logq);
}

// |L'/L(1,chi)| <= 2 loglog q - 0.4989 + 5.91 (loglog q)^2 / log q,
// plus the full proof display; asserts full <= simplified on the range.
inline BoundReport thm11_bound_log(double logq) {
    detail::require_q_range(logq, "thm11_bound");
    double L = std::log(logq);
    BoundReport r;
    r.what = "thm11";
    r.inputs = {{"log_q", logq}, {"loglog_q", L}};
    r.terms.push_back({"2loglogq", "main", 2.0 * L});
    r.terms.push_back({"constant", "lambda-optimized", -0.4989});
    r.terms.push_back({"bracket_simplified", "displayed", 5.91 * L * L / logq});
    r.total = r.terms[0].value + r.terms[1].value + r.terms[2].value;
    double full =
        2.0 * L - 0.4989 + thm11_bracket_displayed(logq) * L * L / logq;
    r.set_comparison(full);
    r.validity_note = "comparison = full proof display; slack >= 0 required";
    if (r.slack < 0) r.flags.push_back("full-exceeds-simplified");
    return r;
}
inline BoundReport thm11_bound(double q) { return thm11_bound_log(std::log(q)); }

// Theorem for the sigma range:
// A_s (log q)^{2-2s} - s 2^{1-s}/(1-s) + 5.561 (log q)^{3-4s}/(1-s)
//   + 0.306 (loglog q)^2/(2s-1).
inline BoundReport thm13_bound_log(double sigma, double logq) {
    detail::require_q_range(logq, "thm13_bound");
    detail::require_thm13_sigma(sigma, logq, "thm13_bound");
    double L = std::log(logq);
    BoundReport r;
    r.what = "thm13";
    r.inputs = {{"sigma", sigma}, {"log_q", logq}};
    r.terms.push_back({"A_term", "A_sigma",
                       A_sigma(sigma) * std::pow(logq, 2.0 - 2.0 * sigma)});
    r.terms.push_back({"negative", "partial-summation",
                       -sigma * std::pow(2.0, 1.0 - sigma) / (1.0 - sigma)});
    r.terms.push_back({"band", "zero-sum",
                       5.561 * std::pow(logq, 3.0 - 4.0 * sigma) / (1.0 - sigma)});
    r.terms.push_back({"LL2", "fluctuation",
                       0.306 * L * L / (2.0 * sigma - 1.0)});
    double tot = 0;
    for (auto& t : r.terms) tot += t.value;
    r.total = tot;
    r.validity_note = "range: 1/2 + 1/LL <= sigma <= 1 - 1/LL, q >= 10^30";
    return r;
}
inline BoundReport thm13_bound(double sigma, double q) {
    return thm13_bound_log(sigma, std::log(q));
}

// Main-term coefficients of the second-derivative bounds:
// lower (-2s^2+6s-2)/(s(1-s)), upper (-2s^2+2s+2)/(s(1-s)).
struct MainCoeffs {
    double lower;
    double upper;
};
inline MainCoeffs section6_main_coeffs(double sigma) {
    if (!(sigma > 0.5 && sigma < 1.0))
        throw domain_error("section6_main_coeffs: sigma in (1/2, 1)");
    double d = sigma * (1.0 - sigma);
    return {(-2.0 * sigma * sigma + 6.0 * sigma - 2.0) / d,
            (-2.0 * sigma * sigma + 2.0 * sigma + 2.0) / d};
}

// Imaginary-part theorem sqrt coefficient (main term only; the error term
// carries an unspecified constant and is excluded by design).
inline double thm15_coefficient(double sigma) {
    double n1 = -sigma * sigma + 3.0 * sigma - 1.0;
    double n2 = -sigma * sigma + sigma + 1.0;
    double den = sigma * sigma * sigma * (1.0 - sigma) * (1.0 - sigma) *
                 (2.0 - sigma);
    return std::sqrt(2.0 * n1 * n1 * n2 / den);
}

// The same coefficient from the averaging argument,
// 2 sqrt(c_a c_b c_g / (c_a + c_b)); equals thm15_coefficient identically.
inline double thm15_coefficient_averaging(double sigma) {
    MainCoeffs mc = section6_main_coeffs(sigma);
    double cg = (-sigma * sigma + 3.0 * sigma - 1.0) /
                (2.0 * sigma * (1.0 - sigma));
    return 2.0 * std::sqrt(mc.upper * mc.lower * cg / (mc.upper + mc.lower));
}

inline double thm15_main_term_log(double sigma, double logq) {
    detail::require_q_range(logq, "thm15_main_term");
    double L = std::log(logq);
    if (sigma < 0.5 + 1.0 / L - 1e-12 ||
        sigma > 1.0 - 1.0 / std::sqrt(L) + 1e-12)
        throw domain_error(
            "thm15_main_term: sigma outside [1/2 + 1/LL, 1 - 1/sqrt(LL)]");
    return thm15_coefficient(sigma) * std::pow(logq, 2.0 - 2.0 * sigma);
}
inline double thm15_main_term(double sigma, double q) {
    return thm15_main_term_log(sigma, std::log(q));
}

// zeta analogue at 1 + it: 2 loglog t - 0.4989 + 5.35 (loglog t)^2/log t,
// with the full display bracket 3.091 + 9.06/LL + 2.137/LL^2.
inline double thm16_bracket_displayed(double logt) {
    double L = std::log(logt);
    return 3.091 + 9.06 / L + 2.137 / (L * L);
}
inline double thm16_bracket_computed(double logt) {
    double L = std::log(logt);
    double el = std::exp(kLambdaStar);
    double c1 = (el - 1.0) * (2.0 * kLambdaStar + 1.0) / (kTwoPi * kLambdaStar);
    double c2 = 2.0 * (el + 1.0) / kLambdaStar;
    double c3 = 0.24 * el;
    return c1 + c2 / L + c3 / (L * L);
}

inline BoundReport thm16_bound_log(double logt) {
    detail::require_q_range(logt, "thm16_bound");
    double L = std::log(logt);
    BoundReport r;
    r.what = "thm16";
    r.inputs = {{"log_t", logt}, {"loglog_t", L}};
    r.terms.push_back({"2loglogt", "main", 2.0 * L});
    r.terms.push_back({"constant", "lambda-optimized", -0.4989});
    r.terms.push_back({"bracket_simplified", "displayed", 5.35 * L * L / logt});
    r.total = r.terms[0].value + r.terms[1].value + r.terms[2].value;
    double full =
        2.0 * L - 0.4989 + thm16_bracket_displayed(logt) * L * L / logt;
    r.set_comparison(full);
    r.validity_note = "comparison = full proof display; slack >= 0 required";
    if (r.slack < 0) r.flags.push_back("full-exceeds-simplified");
    return r;
}
inline BoundReport thm16_bound(double t) { return thm16_bound_log(std::log(t)); }

// |b(chi)| <= log q + 2 loglog q - 0.224, with the derivation margins
// reported: the -0.224 reconstructs from the q-aspect theorem through
//   -0.4989 - log 2pi + gamma + 5.91 (loglog q)^2/log q  at q = 10^30.
struct CorollaryReport {
    double value;
    double derivation_margin;        // vs thm11 + log(q/2pi) + gamma route
    double triangle_margin;          // vs thm11 + |{-log(q/2pi) + gamma}|
};
inline CorollaryReport corollary_b_bound_log(double logq) {
    detail::require_q_range(logq, "corollary_b_bound");
    double L = std::log(logq);
    double value = logq + 2.0 * L - 0.224;
    double thm11_total = 2.0 * L - 0.4989 + 5.91 * L * L / logq;
    double route = thm11_total + (logq - kLn2Pi) + kEulerGamma;
    double tight = thm11_total + std::fabs(-(logq - kLn2Pi) + kEulerGamma);
    return {value, value - route, value - tight};
}
inline CorollaryReport corollary_b_bound(double q) {
    return corollary_b_bound_log(std::log(q));
}

// Smallest decade 10^k (k <= 400) from which the FULL proof display stays
// below 2 loglog; records the expected failure one decade earlier.
struct ThresholdResult {
    double log_value;       // log(10^k)
    int decade;             // k
    bool fails_one_below;   // inequality fails at 10^(k-1)
};

inline ThresholdResult threshold_search(bool dirichlet_kind) {
    auto passes = [&](int k) {
        double lq = magnitudes::log_of_decade(k);
        double L = std::log(lq);
        double bracket = dirichlet_kind ? thm11_bracket_displayed(lq)
                                        : thm16_bracket_displayed(lq);
        return -0.4989 + bracket * L * L / lq <= 0.0;
    };
    for (int k = 30; k <= 400; ++k) {
        if (!passes(k)) continue;
        bool all_above = true;
        for (int j = k; j <= 400; ++j)
            if (!passes(j)) { all_above = false; break; }
        if (all_above)
            return {magnitudes::log_of_decade(k), k, !passes(k - 1)};
    }
    throw error("threshold_search: no passing decade up to 10^400");
}

}  // namespace explicitlb
