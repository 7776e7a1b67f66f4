#pragma once

#include <stdexcept>
#include <string>

namespace concord {

// Malformed or out-of-domain input (CLI exit code 2).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input is valid but outside what the implementation can decide (exit code 3).
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two independent computations disagreed.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace concord
