#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frobq {

// Base class of every error the library reports to callers.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ill-formed quiver, path, generator or parameter.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Lexical or syntax error in a quiver document; carries a 1-based location.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// The ideal may define a finite dimensional quotient, but the engine cannot
// certify it (cyclic quiver, monomial part does not bound path length).
class UnsupportedRegime : public Error {
 public:
  using Error::Error;
};

// The quotient is provably infinite dimensional.
class InfiniteDimensional : public Error {
 public:
  using Error::Error;
};

// A self-check failed. Never caused by user input alone.
class InternalFault : public Error {
 public:
  using Error::Error;
};

// A constructed coproduct failed the bimodule check.
class VerificationError : public Error {
 public:
  using Error::Error;
};

// Arithmetic between scalars of different fields.
class ScalarKindError : public Error {
 public:
  using Error::Error;
};

}  // namespace frobq
