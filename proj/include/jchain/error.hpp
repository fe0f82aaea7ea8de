#pragma once

#include <stdexcept>
#include <string>

namespace jchain {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed scalar/matrix/JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A supplied lambda is not an eigenvalue (or 0 is not one where required).
class EigenvalueError : public Error {
public:
    using Error::Error;
};

/// A truncation index is out of bounds, or misused (e.g. distinguishing an
/// admissible index).
class IndexError : public Error {
public:
    using Error::Error;
};

/// Internal inconsistency: a guaranteed identity failed. Never expected.
class TheoremError : public Error {
public:
    using Error::Error;
};

/// A Hamiltonian matrix is not nilpotent, or has odd elementary divisors.
class NilpotencyError : public Error {
public:
    using Error::Error;
};

/// A Riccati problem violates its invariants (hermiticity, PSD,
/// controllability).
class ProblemError : public Error {
public:
    using Error::Error;
};

} // namespace jchain
