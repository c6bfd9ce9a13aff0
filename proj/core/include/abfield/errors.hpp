#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace abfield {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition was violated by the caller.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A field or gauge was evaluated outside the set where it is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Quadrature of the sheet-current integral requested too close to the sheet.
class SingularProximityError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Finite-difference stencil does not fit (e.g. it would cross the axis).
class StencilError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Loop quadrature failed at a specific node.
class IntegrationError : public Error {
public:
    IntegrationError(const std::string& what, std::size_t segment, double parameter)
        : Error(what), segment_(segment), parameter_(parameter) {}

    [[nodiscard]] std::size_t segment() const noexcept { return segment_; }
    [[nodiscard]] double parameter() const noexcept { return parameter_; }

private:
    std::size_t segment_;
    double parameter_;
};

/// Surface quadrature failed on one or more faces.
class FluxEvaluationError : public Error {
public:
    FluxEvaluationError(const std::string& what, std::vector<std::size_t> faces)
        : Error(what), faces_(std::move(faces)) {}

    [[nodiscard]] const std::vector<std::size_t>& faces() const noexcept { return faces_; }

private:
    std::vector<std::size_t> faces_;
};

}  // namespace abfield
