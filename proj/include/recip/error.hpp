#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace recip {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed expression or scalar literal. `position` is a 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Evaluation at a zero or pole, zero units, and similar algebraic misuse.
class MathError : public Error {
public:
    using Error::Error;
};

/// A zero or pole of a function lies exactly on a contour.
class OnContourError : public Error {
public:
    using Error::Error;
};

/// Adjacent samples too far apart in argument, or an ambiguous winding number.
class SamplingError : public Error {
public:
    using Error::Error;
};

/// Invalid circle configurations, mismatched grids, inadmissible functions.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A function has a zero or pole inside the body of a bordered domain.
class InadmissibleError : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace recip
