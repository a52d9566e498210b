#pragma once

#include <stdexcept>
#include <string>

namespace trihopf {

/// Base of every exception thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct ShapeError : Error {
  using Error::Error;
};

struct NotInvertible : Error {
  using Error::Error;
};

struct GroupError : Error {
  using Error::Error;
};

struct NotAbelian : Error {
  using Error::Error;
};

struct BicharacterError : Error {
  using Error::Error;
};

struct TwistError : Error {
  using Error::Error;
};

struct SeptupleInvariantViolation : Error {
  using Error::Error;
};

struct UnsupportedStratum : Error {
  using Error::Error;
};

struct InvalidDrinfeldElement : Error {
  using Error::Error;
};

struct NotQuasitriangular : Error {
  using Error::Error;
};

struct OrderNotFound : Error {
  using Error::Error;
};

/// Malformed file or document.
struct FormatError : Error {
  using Error::Error;
};

}  // namespace trihopf
