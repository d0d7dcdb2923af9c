#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lsys {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Negation was requested for an unsigned symbol (such as the origin 0).
class UnsignedSymbolNegation : public Error {
 public:
  using Error::Error;
};

class UnknownSymbol : public Error {
 public:
  using Error::Error;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

/// A materialized word or morphism would exceed the configured symbol cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class UninterpretableSymbol : public Error {
 public:
  using Error::Error;
};

class DegenerateScale : public Error {
 public:
  using Error::Error;
};

/// Raised by (or on behalf of) a streaming consumer that refused a symbol.
class SinkFailure : public Error {
 public:
  using Error::Error;
};

/// Malformed definition text. Line and column are 1-based; 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line,
                            std::size_t column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// Well-formed definition text that does not describe a valid system.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, std::string token)
      : Error(what), token_(std::move(token)) {}

  /// The offending token, or empty if the problem is not token-specific.
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

}  // namespace lsys
