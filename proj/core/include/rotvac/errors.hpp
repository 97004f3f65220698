#pragma once

#include <stdexcept>
#include <string>

namespace rotvac {

/// Input outside the mathematical domain of an operation (β ≥ 1, |b| ≥ 1,
/// coincident times, poles of a closed form, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A two-point function evaluated at coincident arguments.
class DivergenceError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A quadrature, series or extrapolation failed to reach its tolerance.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, std::string diagnostics = {})
        : std::runtime_error(what), diagnostics_(std::move(diagnostics)) {}

    const std::string& diagnostics() const noexcept { return diagnostics_; }

private:
    std::string diagnostics_;
};

/// Requested correlation component or option that has no implementation.
class UnsupportedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace rotvac
