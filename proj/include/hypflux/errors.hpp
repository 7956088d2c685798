#pragma once

#include <stdexcept>
#include <string>

namespace hypflux {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Separation exactly on the light cone, where correlators and the
/// commutator step function are singular or undefined.
class LightConeError : public DomainError {
public:
    explicit LightConeError(const std::string& msg) : DomainError(msg) {}
};

/// Field point not yet causally connected to the trajectory.
class CausalityError : public DomainError {
public:
    explicit CausalityError(const std::string& msg) : DomainError(msg) {}
};

/// Evaluation requested at a point where the quantity diverges.
class SingularityError : public DomainError {
public:
    explicit SingularityError(const std::string& msg) : DomainError(msg) {}
};

/// A quadrature or root solve failed to reach the requested tolerance.
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

} // namespace hypflux
