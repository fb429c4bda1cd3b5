#pragma once

#include <stdexcept>
#include <string>

namespace hcob {

/// Base class for every precondition or invariant violation raised by the
/// library. The CLI maps these to exit code 2.
class Error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Two morphisms (or cyclic maps) were combined whose objects do not match.
class ObjectMismatch : public Error {
  public:
    using Error::Error;
};

/// A value failed to satisfy the invariant of its type.
class InvariantViolation : public Error {
  public:
    using Error::Error;
};

} // namespace hcob
