#pragma once

#include <stdexcept>
#include <string>

namespace flattorus {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad N, t outside [0,1], NaN input, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A constructed object is internally inconsistent: atlas gap, non-manifold edge, failed K7 check.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Operation only defined for 3D ambient space was given a 4D embedding (or vice versa).
class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

/// A game or service configuration cannot be realized.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace flattorus
