#pragma once

#include <stdexcept>
#include <string>

namespace cointjump {

/// Cancellation has exhausted the working precision of a probability
/// series; carries the offending matrix entry.
class InstabilityError : public std::runtime_error {
public:
    InstabilityError(int m, int n, double value)
        : std::runtime_error("numerical instability at pmf entry (" + std::to_string(m) + "," +
                             std::to_string(n) + "): value " + std::to_string(value)),
          m(m), n(n), value(value) {}
    int m;
    int n;
    double value;
};

/// A truncated series did not converge within its admissible tail budget.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One-step jump probabilities left [0,1]; the time step is too coarse
/// for the requested intensities.
class DtTooLargeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Forward-curve lookups outside the curve's support.
class CurveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Calibration failures (degenerate data, no converged start, misaligned
/// inputs).
class FitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Configuration / schema violations. Exit code 2 at the CLI boundary.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cointjump
