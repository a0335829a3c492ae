#pragma once

#include <stdexcept>
#include <string>

namespace fuzzystar {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed interval or polygon.
class GeometryError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// Argument outside its admissible range (alpha, h, p, eps, spacing, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A level stack violating one of the defining conditions. `condition()`
// names it: "normality (i)", "compactness (v)", "nesting", "dimension".
class InvariantViolation : public Error {
public:
    InvariantViolation(std::string condition, const std::string& what)
        : Error(condition + ": " + what), condition_(std::move(condition)) {}

    const std::string& condition() const noexcept { return condition_; }

private:
    std::string condition_;
};

} // namespace fuzzystar
