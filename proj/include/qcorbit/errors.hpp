#ifndef QCORBIT_ERRORS_HPP
#define QCORBIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qcorbit {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller passed data that violates a documented precondition.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Operation is undefined for the given values (division by zero,
/// spectrum outside the base field, ideal-membership violations).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed. Indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

/// The codeword space is larger than the enumeration limit.
/// `count_str` holds the decimal value of q^K.
class EnumerationLimit : public Error {
public:
    EnumerationLimit(const std::string& msg, std::string count)
        : Error(msg), count_str(std::move(count)) {}
    std::string count_str;
};

/// A group analysis was requested for a code the group does not stabilize.
class GroupNotApplicable : public Error {
public:
    using Error::Error;
};

/// Config-file syntax error with position information.
class ParseError : public InvalidInput {
public:
    ParseError(int line, int col, const std::string& msg)
        : InvalidInput("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    int line;
    int col;
};

} // namespace qcorbit

#endif
