#pragma once

#include <stdexcept>
#include <string>

namespace faultloc {

// Root of every error thrown by the library. The CLI maps each subclass to an
// exit code; see tools/faultloc_main.cpp.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an in-memory argument failed (unknown node id, k out of
// range, monitor passed where a non-monitor is required, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

// A serialized document (topology, path list, outcome map) is malformed.
class FormatError : public Error {
 public:
  using Error::Error;
};

// The requested operation is not meaningful for the given arguments, e.g.
// UP analysis without a path set.
class UsageError : public Error {
 public:
  using Error::Error;
};

// An exact computation would exceed its configured size guard.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A result violated an internal consistency check. Always a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace faultloc
