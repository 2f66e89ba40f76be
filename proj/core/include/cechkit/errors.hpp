#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cechkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonPrimeModulus : public Error {
 public:
  using Error::Error;
};

/// A polynomial (or polynomial matrix entry) mixes internal degrees where a
/// homogeneous one was required.
class NonHomogeneous : public Error {
 public:
  using Error::Error;
};

/// A linear map does not carry the source relations into the target ones.
class RelationNotPreserved : public Error {
 public:
  using Error::Error;
};

/// A short exact sequence failed its degreewise rank checks.
class NotExact : public Error {
 public:
  using Error::Error;
};

class NonMonomial : public Error {
 public:
  using Error::Error;
};

/// Something that should be a complex or chain map is not (d∘d ≠ 0,
/// non-commuting square, mismatched shapes).
class NotAComplex : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed. Line and column are 1-based; zero means
/// "unknown".
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)), message_(message), line_(line), column_(column) {}

  /// The message without the location prefix.
  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    if (line == 0 && column == 0) return message;
    if (line == 0) return "column " + std::to_string(column) + ": " + message;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace cechkit
