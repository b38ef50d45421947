#pragma once

#include <stdexcept>
#include <string>

namespace explicitlb {

// Base for everything thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A requested size/limit exceeds the configured budget.
struct capacity_error : error { using error::error; };

// An argument falls outside the range covered by a table or dataset.
struct range_error : error { using error::error; };

// An argument violates a mathematical precondition.
struct domain_error : error { using error::error; };

// Input text could not be parsed; message carries the line number.
struct parse_error : error { using error::error; };

// A numeric method could not reach the requested accuracy.
struct precision_error : error { using error::error; };

// Evaluation too close to a pole.
struct pole_error : error { using error::error; };

// |L| fell below the near-zero threshold; ratio would be meaningless.
struct near_zero_error : error { using error::error; };

// Intermediate values exceed floating-point range.
struct overflow_error : error { using error::error; };

// A dataset does not cover the requested height/range.
struct coverage_error : error { using error::error; };

}  // namespace explicitlb
