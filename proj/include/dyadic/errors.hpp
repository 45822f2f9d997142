#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dyadic {

struct DyadicError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidIntervalError : DyadicError { using DyadicError::DyadicError; };
struct DepthMismatchError : DyadicError { using DyadicError::DyadicError; };
struct DepthInsufficientError : DyadicError { using DyadicError::DyadicError; };
struct NotASubintervalError : DyadicError { using DyadicError::DyadicError; };

// Exact rectangle supremum refused above the configured depth cap.
struct DepthCapError : DyadicError {
    DepthCapError(const std::string& msg, std::size_t pairs)
        : DyadicError(msg), rectangle_pairs(pairs) {}
    std::size_t rectangle_pairs;
};

// Spectral-norm iteration failed to certify; carries the best estimate seen.
struct NormConvergenceError : DyadicError {
    NormConvergenceError(const std::string& msg, double best, double resid, int iters)
        : DyadicError(msg), best_estimate(best), residual(resid), iterations(iters) {}
    double best_estimate;
    double residual;
    int iterations;
};

} // namespace dyadic
