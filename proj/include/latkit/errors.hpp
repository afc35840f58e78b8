#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace latkit {

// Base class for everything this library throws.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix/vector shape violations (empty matrix, mismatched product dims, ...).
struct dimension_error : error {
    using error::error;
};

// An operation required full row rank and did not get it.
// Carries the rank that was actually computed.
struct rank_error : error {
    rank_error(std::string msg, std::size_t computed, std::size_t required)
        : error(std::move(msg)), computed_rank(computed), required_rank(required) {}
    std::size_t computed_rank;
    std::size_t required_rank;
};

// Kernel requested for a square full-rank system: the only solution is 0.
struct empty_kernel_error : error {
    using error::error;
};

// An exhaustive search would exceed the configured candidate budget.
struct budget_error : error {
    using error::error;
};

// Malformed matrix file (either text or JSON form).
struct parse_error : error {
    using error::error;
};

// Bad argument value (zero matrix where a nonzero one is required, r = 0 root, ...).
struct argument_error : error {
    using error::error;
};

// An internal identity that is mathematically guaranteed failed to hold.
// Seeing this means a bug, not bad input.
struct internal_fault : error {
    using error::error;
};

}  // namespace latkit
