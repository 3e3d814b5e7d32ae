#pragma once

#include <stdexcept>
#include <string>

namespace homcoh {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NonMultiplicativeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace homcoh
