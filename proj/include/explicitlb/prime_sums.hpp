#pragma once

#include <cmath>

#include "explicitlb/errors.hpp"
#include "explicitlb/kahan.hpp"
#include "explicitlb/lambda_table.hpp"

namespace explicitlb {

// Truncation parameters (x, y) of the moment-formula weights, tied to
// (sigma, lambda, q) by  y = exp(lambda/(sigma-1/2)),  x*y = log^2 q.
struct TruncationParams {
    double x;
    double y;
    double sigma;
    double lambda;
    double q_or_t;

    TruncationParams(double x_, double y_, double sigma_ = 1.0,
                     double lambda_ = 0.0, double q_or_t_ = 0.0)
        : x(x_), y(y_), sigma(sigma_), lambda(lambda_), q_or_t(q_or_t_) {
        validate();
    }

    static TruncationParams from_sigma_lambda_q(double sigma, double lambda,
                                                double q) {
        if (!(sigma > 0.5 && sigma <= 1.0))
            throw domain_error("sigma must lie in (1/2, 1]");
        if (!(lambda > 0)) throw domain_error("lambda must be positive");
        double logq = std::log(q);
        double y = std::exp(lambda / (sigma - 0.5));
        double x = logq * logq / y;
        return TruncationParams(x, y, sigma, lambda, q);
    }

private:
    void validate() const {
        if (!(x >= 2.0)) throw domain_error("truncation requires x >= 2");
        if (!(y >= 2.0)) throw domain_error("truncation requires y >= 2");
    }
};

// sum_{n<=x} Lambda(n)/n^sigma, compensated.
inline double mertens_lambda_sum(const LambdaTable& table, double x,
                                 double sigma) {
    if (x < 2 || x > static_cast<double>(table.limit()))
        throw range_error("mertens_lambda_sum: x outside table range");
    const auto& pp = table.prime_powers();
    const auto& lam = table.lambda_values();
    KahanSum acc;
    for (std::size_t i = 0; i < pp.size() && pp[i] <= x; ++i)
        acc += lam[i] * std::pow(static_cast<double>(pp[i]), -sigma);
    return acc.value();
}

// Selberg weight: Lambda(n) up to x, damped by log(xy/n)/log(y) on (x, xy].
inline double truncated_lambda(const LambdaTable& table, std::uint64_t n,
                               const TruncationParams& p) {
    double xy = p.x * p.y;
    if (static_cast<double>(n) > xy)
        throw domain_error("truncated_lambda: n > x*y");
    double lam = table.von_mangoldt(n);
    if (lam == 0.0 || static_cast<double>(n) <= p.x) return lam;
    return lam * std::log(xy / static_cast<double>(n)) / std::log(p.y);
}

// S_{x,y}(sigma) = sum_{n<=x} Lambda(n)/n^s
//                + (1/log y) sum_{x<n<=xy} Lambda(n) log(xy/n)/n^s.
inline double s_xy(const LambdaTable& table, const TruncationParams& p) {
    double xy = p.x * p.y;
    if (xy > static_cast<double>(table.limit()))
        throw range_error("s_xy: x*y exceeds table limit");
    const auto& pp = table.prime_powers();
    const auto& lam = table.lambda_values();
    const double logy = std::log(p.y);
    KahanSum head, tail;
    for (std::size_t i = 0; i < pp.size() && pp[i] <= xy; ++i) {
        double n = pp[i];
        double w = lam[i] * std::pow(n, -p.sigma);
        if (n <= p.x)
            head += w;
        else
            tail += w * std::log(xy / n);
    }
    return head.value() + tail.value() / logy;
}

}  // namespace explicitlb
