#pragma once

#include <stdexcept>
#include <string>

namespace nuwind {

/// Bad argument values (non-positive heights, zero capacities, ...).
struct InvalidInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input is outside the stated validity domain of a formula.
struct ValidityDomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Malformed input file; message names the offending location.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid or inconsistent configuration (dangling references, empty tables).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Adaptive integration could not proceed at the requested tolerance.
struct StiffnessError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Generator has more than one recurrent class; steady state is not unique.
struct SteadyStateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace nuwind
