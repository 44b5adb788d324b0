#pragma once

#include <stdexcept>
#include <string>

namespace qslice {

/// Assignment / state length does not match the model or operator.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Structural input problem: duplicate edge, unknown tag, bad coefficient, ...
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Problem exceeds a hard resource cap (qubit count, enumeration size).
struct SizeCapError : std::length_error {
    using std::length_error::length_error;
};

/// Removing the requested edges does not disconnect the interaction graph.
struct NotSeparableError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Value outside the documented domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace qslice
