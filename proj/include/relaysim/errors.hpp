#pragma once

#include <stdexcept>
#include <string>

namespace relaysim {

// invalid argument values / out-of-domain evaluation points
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// paired spans whose lengths must agree but don't
struct LengthMismatchError : DomainError {
    using DomainError::DomainError;
};

// root bracketing walked off the representable range
struct BracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// adaptive quadrature failed to reach the requested tolerance
struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// survival function underflowed to zero before the requested grid point
struct TailUnderflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// parent law failed the light-tail (Gumbel domain) precheck
struct TailDomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// fading law not supported by the requested closed form
struct UnsupportedLawError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// malformed config file / CLI values; maps to exit code 2
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace relaysim
