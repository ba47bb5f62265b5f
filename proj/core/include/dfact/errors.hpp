#pragma once

#include <stdexcept>
#include <string>

namespace dfact {

/// Bad input: violated precondition, malformed parameters, rejected potential.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation that cannot be carried out in floating point (overflow etc).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dfact
