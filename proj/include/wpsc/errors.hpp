#pragma once

#include <stdexcept>
#include <string>

namespace wpsc {

// Caller broke an API precondition (bad sizes, unsupported parameters, ...).
struct UsageError : std::invalid_argument {
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// An input stream or file does not match the documented format.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// A wet-constrained linear system has no solution: the required syndrome
// adjustment is not in the span of the dry columns.
struct RankDeficient : std::runtime_error {
    explicit RankDeficient(const std::string& what) : std::runtime_error(what) {}
};

// A solution exists but needs more changes than the caller allowed.
struct BoundExceeded : std::runtime_error {
    explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

// No admissible change pattern produces the requested message.
struct Infeasible : std::runtime_error {
    explicit Infeasible(const std::string& what) : std::runtime_error(what) {}
};

// Bounded-weight decoding hit a syndrome outside the precomputed table.
struct DecodeFailure : std::runtime_error {
    explicit DecodeFailure(const std::string& what) : std::runtime_error(what) {}
};

// No (r, f) parameter pair yields positive capacity for the given wet masks.
struct NoFeasiblePlan : Infeasible {
    explicit NoFeasiblePlan(const std::string& what) : Infeasible(what) {}
};

// The sender stored the reserved all-ones marker instead of a payload.
struct DeclaredFailure : std::runtime_error {
    explicit DeclaredFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wpsc
