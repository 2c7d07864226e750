#pragma once

#include <stdexcept>
#include <string>

namespace trimeval {

/// Base of all errors thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller broke an operation's contract (mismatched moduli, bad shapes,
/// indices out of range).
class UsageError : public Error {
public:
    using Error::Error;
};

/// Malformed external input: bad exponents, duplicate terms or nodes,
/// residues out of range.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A count would not fit the 63-bit capacity guard.
class CapacityError : public Error {
public:
    using Error::Error;
};

class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

/// Pivot-free elimination hit a zero pivot, or the matrix is singular.
class SingularOrNonLUError : public Error {
public:
    using Error::Error;
};

} // namespace trimeval
