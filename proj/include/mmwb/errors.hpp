#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mmwb {

/// Base of every error raised by the workbench.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class BadArgument : public Error {
 public:
  using Error::Error;
};

class BadField : public Error {
 public:
  using Error::Error;
};

class Undefined : public Error {
 public:
  using Error::Error;
};

class InvalidAlgorithm : public Error {
 public:
  using Error::Error;
};

class BadTransform : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("matrix is singular") {}
};

/// A leading principal block vanished although the matrix is invertible;
/// block elimination runs without pivoting.
class PivotFailure : public Error {
 public:
  PivotFailure() : Error("zero leading principal block (no pivoting)") {}
};

/// Malformed text input. `line()` is 1-based, 0 when unknown.
class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mmwb
