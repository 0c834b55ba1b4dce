#pragma once

#include <stdexcept>
#include <string>

namespace pronorm {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mismatched permutation degrees or incompatible domains.
struct DegreeMismatch : Error {
  using Error::Error;
};

// An element or subgroup failed a membership precondition.
struct NotASubgroup : Error {
  using Error::Error;
};

// A stated precondition of an operation does not hold.
struct PreconditionError : Error {
  using Error::Error;
};

// A configured search or enumeration cap was exceeded. The operation is
// aborted with this error; results are never silently truncated.
struct CapExceeded : Error {
  using Error::Error;
};

// Malformed input (JSON specs, CLI arguments, unknown names).
struct ParseError : Error {
  using Error::Error;
};

}  // namespace pronorm
