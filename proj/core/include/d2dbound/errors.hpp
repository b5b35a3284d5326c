#pragma once

#include <stdexcept>
#include <string>

namespace d2d {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (out-of-range distance, etc.).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A configuration field failed validation. `field()` names the offending key.
class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string& what)
        : Error(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Solver failures. All of these map to the "infeasible" CLI exit code.
class SolverError : public Error {
public:
    using Error::Error;
};

/// The target bit rate cannot be met at d_max even without any interferer.
class NoiseLimited : public SolverError {
public:
    using SolverError::SolverError;
};

/// The (G_D, n_s) iteration did not settle.
class NonConvergent : public SolverError {
public:
    using SolverError::SolverError;
};

/// No BS guard distance admits a single D2D pair.
class Infeasible : public SolverError {
public:
    using SolverError::SolverError;
};

} // namespace d2d
