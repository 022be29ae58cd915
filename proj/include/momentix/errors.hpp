#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace momentix {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. `line()` is 1-based; 0 when no line applies.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Algebraic preconditions on power series and Riordan arrays.
class DivisorNotUnit : public Error {
public:
    DivisorNotUnit() : Error("divisor has zero constant term") {}
};

class InnerNotNilpotent : public Error {
public:
    InnerNotNilpotent() : Error("inner series of a composition must have zero constant term") {}
};

class NotInvertible : public Error {
public:
    using Error::Error;
};

class InsufficientPrecision : public Error {
public:
    using Error::Error;
};

class KindMismatch : public Error {
public:
    KindMismatch() : Error("cannot combine ordinary and exponential Riordan arrays") {}
};

/// Errors caused by the data rather than by the caller: too few terms,
/// too shallow a continued fraction, or a vanishing Hankel minor.
class DataError : public Error {
public:
    using Error::Error;
};

class InsufficientTerms : public DataError {
public:
    InsufficientTerms(std::size_t needed, std::size_t available)
        : DataError("need " + std::to_string(needed) + " terms, have " + std::to_string(available)),
          needed_(needed), available_(available) {}
    std::size_t needed() const noexcept { return needed_; }
    std::size_t available() const noexcept { return available_; }

private:
    std::size_t needed_;
    std::size_t available_;
};

class InsufficientDepth : public DataError {
public:
    using DataError::DataError;
};

/// The Hankel minor h_k vanishes, so the sequence is not regular through k.
class SingularMinor : public DataError {
public:
    explicit SingularMinor(std::size_t index)
        : DataError("Hankel minor h_" + std::to_string(index) + " is zero; sequence is not regular"),
          index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class UnknownName : public Error {
public:
    explicit UnknownName(const std::string& name) : Error("unknown sequence name '" + name + "'") {}
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class NetworkError : public Error {
public:
    using Error::Error;
};

class NotFound : public Error {
public:
    using Error::Error;
};

}  // namespace momentix
