#pragma once

#include <stdexcept>
#include <string>

namespace turanlab {

/// Malformed input or violated precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The request is well-formed but exceeds a hard size cap of an exhaustive routine.
class UnsupportedSize : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Materialization would exceed the configured memory guard.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations of the same quantity disagreed.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Interval arithmetic could not certify a comparison.
class Indeterminate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace turanlab
