#pragma once
#include <stdexcept>

namespace flns {

// Configuration / usage problems. CLI maps these (and std::invalid_argument,
// std::domain_error) to exit code 1.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numeric contract violations detected at run time (non-Hermitian data fed to
// a synthesis, unresolved kernels, ...). CLI maps these to exit code 2.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace flns
