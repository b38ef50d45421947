#pragma once

#include <cmath>

namespace explicitlb {

// Kahan-Babuska (Neumaier) compensated accumulator. Used for every sum
// with more than a handful of terms; the verification margins here go
// down to ~1e-3 and must not be polluted by naive accumulation.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    KahanSum& operator+=(double x) { add(x); return *this; }
    double value() const { return sum + comp; }
};

// Double-double accumulator (~106-bit significand). Used by the
// independent re-verification path for reported violations.
struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;

    void add(double x) {
        double s = hi + x;
        double bb = s - hi;
        double err = (hi - (s - bb)) + (x - bb);
        hi = s;
        lo += err;
        // renormalize
        double t = hi + lo;
        lo = lo - (t - hi);
        hi = t;
    }
    DoubleDouble& operator+=(double x) { add(x); return *this; }
    double value() const { return hi + lo; }
};

}  // namespace explicitlb
