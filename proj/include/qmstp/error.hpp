#pragma once

#include <stdexcept>
#include <string>

namespace qmstp {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller passed arguments that violate an operation's preconditions.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or unreadable path.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The graph is not connected, so no spanning tree exists.
class ConnectivityError : public Error {
 public:
  using Error::Error;
};

}  // namespace qmstp
