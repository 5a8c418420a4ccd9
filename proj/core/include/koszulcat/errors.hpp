#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace koszulcat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes of matrices, spaces or carriers do not fit together.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A map expected to be surjective has no right inverse.
class NoSection : public Error {
 public:
  using Error::Error;
};

/// An element was supplied at an object other than the one required.
class WrongObject : public Error {
 public:
  using Error::Error;
};

/// An element is not in the commutant CA(1).
class NotCentral : public Error {
 public:
  using Error::Error;
};

/// A subfamily is not stable under the module actions or functoriality.
class StabilityError : public Error {
 public:
  using Error::Error;
};

/// A comparison map that should be invertible is not.
class IsoFailure : public Error {
 public:
  using Error::Error;
};

/// Requested degrees lie outside the certified window of a truncated carrier.
class WindowError : public Error {
 public:
  using Error::Error;
};

/// A required certificate or input condition is missing.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An index or degree argument is out of its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A check that holds for every valid input failed; indicates a bug.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed problem file or report, with 1-based source position when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(line ? what + " (line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ")"
                   : what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace koszulcat
