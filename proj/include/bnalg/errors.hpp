#ifndef BNALG_ERRORS_HPP
#define BNALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bnalg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad graph, bad index, unknown label).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// An enumeration or matrix size guard was exceeded.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

/// The input is well formed but an operation's structural precondition fails,
/// e.g. asking for the plus-basis parametrization of a non-toric network.
class PreconditionFailed : public Error {
public:
    using Error::Error;
};

}  // namespace bnalg

#endif  // BNALG_ERRORS_HPP
