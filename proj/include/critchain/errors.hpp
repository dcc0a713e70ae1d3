#pragma once

#include <stdexcept>
#include <string>

namespace critchain {

/// Input outside the physical domain (e.g. coupling at or past the
/// critical point, non-positive frequency).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// An iterative routine failed to reach its tolerance.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A requested computation exceeds the configured memory budget.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Phase alignment between eigenvectors failed (overlap too small).
struct GaugeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input is valid but degenerate; the result is trivial.
struct DegenerateInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace critchain
