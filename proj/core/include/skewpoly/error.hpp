#pragma once

#include <stdexcept>
#include <string>

namespace skewpoly {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition does not hold (mismatched rings, zero divisor, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A quantity cannot be decided at the precision carried by the inputs.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// A brute-force enumeration would exceed its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace skewpoly
