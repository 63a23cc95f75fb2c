#pragma once

#include <stdexcept>
#include <string>

namespace vnum {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two operands live in polynomial rings with different variable counts.
class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t expected, std::size_t got)
        : Error("dimension mismatch: expected " + std::to_string(expected) +
                " variables, got " + std::to_string(got)) {}
};

/// An operation was asked for something that is not defined on its input
/// (alpha of the zero ideal, decomposition of the unit ideal, ...).
class UndefinedOperation : public Error {
public:
    using Error::Error;
};

class ContainmentViolation : public Error {
public:
    using Error::Error;
};

class NotAssociatedPrime : public Error {
public:
    NotAssociatedPrime() : Error("not an associated prime") {}
};

/// The socle quotient was zero: the supplied associated-prime set is stale.
class NoWitness : public Error {
public:
    NoWitness() : Error("no witness exists") {}
};

class ExponentOverflow : public Error {
public:
    ExponentOverflow() : Error("exponent overflow") {}
};

/// Malformed ideal or prime text. `position` is a 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error("parse error at position " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace vnum
