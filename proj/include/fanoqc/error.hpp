#pragma once

#include <stdexcept>
#include <string>

namespace fanoqc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct DimMismatch : Error {
  using Error::Error;
};

struct LengthMismatch : Error {
  using Error::Error;
};

struct NotUnipotent : Error {
  using Error::Error;
};

struct NotAdapted : Error {
  using Error::Error;
};

struct MalformedConnection : Error {
  using Error::Error;
};

struct InvalidParams : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace fanoqc
