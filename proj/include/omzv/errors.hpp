#pragma once

#include <stdexcept>
#include <string>

namespace omzv {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input outside the domain of an operation (non-admissible index, word not in
// the required submodule, parameters outside the convergence region).
class DomainError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// Integrand singularity hit or too close to an integration contour.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

}  // namespace omzv
