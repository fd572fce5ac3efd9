#pragma once

#include <stdexcept>
#include <string>

namespace biell {

// Work-bound overruns (factoring caps, stage timeouts). Always an explicit
// failure, never a silent fallback.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A certified numeric or p-adic verdict could not be reached at the
// configured precision.
struct PrecisionExceeded : std::runtime_error {
    explicit PrecisionExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A constructor precondition failed; the message names the violated hypothesis.
struct ParameterViolation : std::invalid_argument {
    explicit ParameterViolation(const std::string& what) : std::invalid_argument(what) {}
};

// Repeated root where a nonsingular model is required.
struct SingularCurve : std::invalid_argument {
    explicit SingularCurve(const std::string& what) : std::invalid_argument(what) {}
};

// A constructed change of variables failed its exact identity check.
// Internal consistency error: must never escape a release build.
struct MapIdentityFailed : std::logic_error {
    explicit MapIdentityFailed(const std::string& what) : std::logic_error(what) {}
};

// Two independent computations of the same quantity disagree.
struct InconsistencyError : std::logic_error {
    explicit InconsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace biell
