#pragma once

#include <set>
#include <stdexcept>
#include <string>

namespace oinv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class MissingAssignment : public Error {
 public:
  using Error::Error;
};

/// A polynomial refers to a variable outside the expected namespace
/// (a Gram symbol where only vector coordinates are allowed, or an index
/// beyond the context's range).
class ForeignVariable : public Error {
 public:
  using Error::Error;
};

/// I + A is singular, so the Cayley transform of A is undefined.
class SingularCayley : public Error {
 public:
  using Error::Error;
};

/// A matrix that was expected to satisfy a defining equation does not.
class InvalidGroupElement : public Error {
 public:
  using Error::Error;
};

class NotInKernel : public Error {
 public:
  using Error::Error;
};

class NoCertificateAtDegree : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::string message, int line, int column,
              std::set<std::string> expected)
      : Error(std::move(message)),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::set<std::string>& expected() const noexcept { return expected_; }

 private:
  int line_;
  int column_;
  std::set<std::string> expected_;
};

/// A syntactically valid variable with an index of 0 or beyond the
/// supported range.
class IndexError : public Error {
 public:
  IndexError(std::string message, int line, int column)
      : Error(std::move(message)), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace oinv
