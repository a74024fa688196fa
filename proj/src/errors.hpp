#pragma once

#include <stdexcept>
#include <string>

namespace bnineq {

/// Invalid value supplied by the caller (bad degree, tol <= 0, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A statement's precondition does not hold for the supplied instance
/// (zeros on the wrong side of the circle, k out of range, ...).
class HypothesisError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed JSON payload.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Iteration cap reached without meeting the residual target.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace bnineq
