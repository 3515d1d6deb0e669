#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace algint {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands built over algebras of different order.
class OrderMismatch : public Error {
public:
    OrderMismatch() : Error("operands belong to algebras of different order") {}
};

// Operands carrying different arithmetic modes.
class ModeMismatch : public Error {
public:
    ModeMismatch() : Error("operands use different arithmetic modes") {}
};

class UnsupportedOrder : public Error {
public:
    explicit UnsupportedOrder(const std::string& what) : Error(what) {}
};

class InvalidMode : public Error {
public:
    explicit InvalidMode(const std::string& what) : Error(what) {}
};

class NotInvertible : public Error {
public:
    NotInvertible() : Error("algebra element is not invertible") {}
};

// Raised by interval division; `divisor` is the canonical text of the
// offending denominator.
class DivisionNotAllowed : public Error {
public:
    explicit DivisionNotAllowed(std::string divisor)
        : Error("Interval division in A4 not allowed !! (divisor " + divisor + ")"),
          divisor_(std::move(divisor)) {}

    const std::string& divisor() const noexcept { return divisor_; }

private:
    std::string divisor_;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

class ShapeMismatch : public Error {
public:
    explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

// Text that failed to parse. `position` is 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& message)
        : Error("parse error at position " + std::to_string(position) + ": " + message),
          position_(position), message_(message) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t position_;
    std::string message_;
};

class UnboundVariable : public Error {
public:
    explicit UnboundVariable(const std::string& name)
        : Error("unbound variable '" + name + "'"), name_(name) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class NonConvergence : public Error {
public:
    NonConvergence(const std::string& what, double residual)
        : Error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

}  // namespace algint
