#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ucrga {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes do not conform.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A value violates a type invariant (NaN/Inf entry, zero scale factor, ...).
class InvalidValueError : public Error {
 public:
  using Error::Error;
};

// Malformed CSV/JSON input. line/column are 1-based, 0 when unknown.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class EmptyInputError : public Error {
 public:
  using Error::Error;
};

// An iterative kernel hit its iteration cap.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// Strict RGA requested for a matrix that is not square.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Strict RGA requested for a numerically singular matrix.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

}  // namespace ucrga
