#pragma once

#include <stdexcept>
#include <string>

namespace tdisc {

/// Invalid argument or input outside an operation's precondition.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Request falls outside the parameter regime an operation is valid for,
/// e.g. |b| above the critical ratio for the closed-form designs.
class RegimeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Iterative solver failed to converge or produced a non-optimal point.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tdisc
