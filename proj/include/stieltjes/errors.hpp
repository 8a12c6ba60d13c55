#pragma once

#include <stdexcept>
#include <string>

namespace stieltjes {

// Argument outside the mathematical domain (x <= 0, q outside (0,1), ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Malformed construction parameters (non-integer harmonic, a outside (0,1), ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The integrand needs more quadrature nodes than the configured cap allows.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, long required, long cap)
        : std::runtime_error(what), required_(required), cap_(cap) {}

    long required() const noexcept { return required_; }
    long cap() const noexcept { return cap_; }

private:
    long required_;
    long cap_;
};

// Hankel/Gram computations past what double precision can certify.
class ConditioningError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A documented precondition of an estimator does not hold.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace stieltjes
