#pragma once

#include <stdexcept>
#include <string>

namespace phm {

/// Raised when a caller violates an operation's precondition
/// (dimension mismatch, bad weights, non-unimodular rotation, ...).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an exact series operation would produce a term above the
/// series' degree cap. Products are never truncated silently.
class DegreeCapError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed map-spec input; the message carries a line or field locator.
class MapSpecError : public UsageError {
public:
    using UsageError::UsageError;
};

namespace tol {
// Comparisons on exactly representable fixtures and coefficient majorants.
inline constexpr double kAlgebraic = 1e-12;
// Comparisons involving sampled or continuum quantities.
inline constexpr double kSampled = 1e-9;
inline constexpr double kUnimodular = 1e-12;
inline constexpr double kWeightSum = 1e-12;
inline constexpr double kNonvanishing = 1e-12;
} // namespace tol

} // namespace phm
