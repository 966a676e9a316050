#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropic {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InversionOfZero : public Error {
 public:
  InversionOfZero() : Error("inverse of the zero element is undefined") {}
};

class ZeroToNonpositivePower : public Error {
 public:
  ZeroToNonpositivePower() : Error("zero raised to a non-positive power") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ConjugateOfZeroVector : public Error {
 public:
  ConjugateOfZeroVector() : Error("conjugate of the zero vector is undefined") {}
};

class NotMaxPlus : public Error {
 public:
  NotMaxPlus() : Error("operation requires a max-plus semifield") {}
};

class IrregularInput : public Error {
 public:
  using Error::Error;
};

class ZeroVectorD : public Error {
 public:
  ZeroVectorD() : Error("right-hand vector must be nonzero") {}
};

class InconsistentInput : public Error {
 public:
  using Error::Error;
};

class SingleColumn : public Error {
 public:
  SingleColumn() : Error("independence measure needs at least two columns") {}
};

class InfiniteResidual : public Error {
 public:
  InfiniteResidual() : Error("residual is infinite; no pseudo-solution exists") {}
};

class EnumerationCapExceeded : public Error {
 public:
  EnumerationCapExceeded(std::size_t columns, std::size_t cap)
      : Error("general solution needs " + std::to_string(columns) +
              " columns enumerated, cap is " + std::to_string(cap)),
        columns_(columns),
        cap_(cap) {}
  std::size_t columns() const noexcept { return columns_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t columns_;
  std::size_t cap_;
};

class GridTooLarge : public Error {
 public:
  using Error::Error;
};

class UnknownSemifield : public Error {
 public:
  explicit UnknownSemifield(const std::string& tag)
      : Error("unknown semifield '" + tag + "'") {}
};

/// Malformed input text. Line and column are 1-based; zero means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(line == 0 ? what
                        : std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace tropic
