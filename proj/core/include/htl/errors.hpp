#pragma once

#include <stdexcept>
#include <string>

namespace htl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: non-positive labels, labels outside 1..m, empty polygons.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An operation that needs a proper labeling received one that is not.
class NotProperError : public Error {
 public:
  using Error::Error;
};

/// A rewrite site no longer matches the labeling it is applied to.
class StaleSiteError : public Error {
 public:
  using Error::Error;
};

/// Operation precondition failed (wrong shape of input, out of range argument).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Internal invariant was violated; indicates a bug rather than bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// The requested object exists topologically but has no proper labeling encoding.
class NotRepresentableError : public Error {
 public:
  using Error::Error;
};

/// A builder could not reach the requested size.
class ConstructionIncomplete : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    std::string out = "line " + std::to_string(line);
    if (column != 0) out += ", column " + std::to_string(column);
    return out + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace htl
