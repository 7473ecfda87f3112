#pragma once

#include <stdexcept>
#include <string>

namespace awg {

/// Base of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside a model's validity domain, or a model that evaluates to a
/// non-physical value (n^2 <= 0, vanishing denominator, n1 <= n2).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Root finder called with endpoints whose residuals share a sign.
class NoBracketError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Malformed or unknown configuration (bad key, bad value, bad grid).
class ConfigError : public Error {
public:
    using Error::Error;
};

class UnknownScenario : public ConfigError {
public:
    using ConfigError::ConfigError;
};

}  // namespace awg
