#pragma once

#include <cmath>
#include <functional>
#include <queue>
#include <vector>

#include "explicitlb/errors.hpp"

namespace explicitlb {

// Adaptive Gauss-Kronrod (G7,K15) quadrature. Intervals are split worst
// first; peaked or mildly oscillatory integrands are pre-split by the
// caller at their known features.

namespace detail {

// QUADPACK dqk15 nodes/weights.
inline constexpr double kKronrodX[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0,
};
inline constexpr double kKronrodW[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
};
inline constexpr double kGaussW[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469,
};

struct Segment {
    double a, b, value, err;
    bool operator<(const Segment& o) const { return err < o.err; }
};

template <typename F>
Segment gk15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fk[15];
    for (int i = 0; i < 7; ++i) {
        fk[i] = f(c - h * kKronrodX[i]);
        fk[14 - i] = f(c + h * kKronrodX[i]);
    }
    fk[7] = f(c);
    double kr = kKronrodW[7] * fk[7];
    double gs = kGaussW[3] * fk[7];
    for (int i = 0; i < 7; ++i) kr += kKronrodW[i] * (fk[i] + fk[14 - i]);
    for (int i = 0; i < 3; ++i)
        gs += kGaussW[i] * (fk[2 * i + 1] + fk[13 - 2 * i]);
    double value = kr * h;
    double err = std::fabs((kr - gs) * h);
    return {a, b, value, err};
}

}  // namespace detail

struct QuadResult {
    double value = 0.0;
    double est_error = 0.0;
};

// Integrate f over [a,b] to absolute tolerance tol.
template <typename F>
QuadResult integrate(const F& f, double a, double b, double tol = 1e-10,
                     int max_segments = 4000) {
    std::priority_queue<detail::Segment> heap;
    heap.push(detail::gk15(f, a, b));
    double total = heap.top().value, toterr = heap.top().err;
    int n = 1;
    while (toterr > tol && n < max_segments) {
        detail::Segment worst = heap.top();
        heap.pop();
        total -= worst.value;
        toterr -= worst.err;
        double m = 0.5 * (worst.a + worst.b);
        if (m <= worst.a || m >= worst.b) {  // interval exhausted
            total += worst.value;
            toterr += worst.err;
            break;
        }
        detail::Segment l = detail::gk15(f, worst.a, m);
        detail::Segment r = detail::gk15(f, m, worst.b);
        total += l.value + r.value;
        toterr += l.err + r.err;
        heap.push(l);
        heap.push(r);
        ++n;
    }
    if (toterr > std::max(tol * 64, 1e-6))
        throw precision_error("quadrature did not converge to tolerance");
    return {total, toterr};
}

// Integrate f over [a, +inf): dyadic blocks [a+2^k, a+2^(k+1)] until the
// caller's envelope (an upper bound for |integral of f over [x, inf)|)
// drops below tol.
template <typename F, typename Envelope>
QuadResult integrate_to_inf(const F& f, double a, const Envelope& tail_bound,
                            double tol = 1e-10) {
    QuadResult out;
    double lo = a, width = 1.0;
    for (int k = 0; k < 120; ++k) {
        double hi = lo + width;
        QuadResult part = integrate(f, lo, hi, tol * 0.1);
        out.value += part.value;
        out.est_error += part.est_error;
        lo = hi;
        width *= 2.0;
        double tb = tail_bound(lo);
        if (tb < tol) {
            out.est_error += tb;
            return out;
        }
    }
    throw precision_error("semi-infinite quadrature: tail does not decay");
}

}  // namespace explicitlb
