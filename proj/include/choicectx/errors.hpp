#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace choicectx {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text. Line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed text describing an invalid object. `path` is a JSON pointer.
class SemanticError : public Error {
 public:
  SemanticError(const std::string& message, std::string path)
      : Error(message + " (at " + (path.empty() ? std::string("/") : path) + ")"),
        path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class UnknownVariable : public Error {
 public:
  using Error::Error;
};

class UnboundVariable : public Error {
 public:
  using Error::Error;
};

class UnknownContext : public Error {
 public:
  using Error::Error;
};

class VariableNotInContext : public Error {
 public:
  using Error::Error;
};

class DomainMismatch : public Error {
 public:
  using Error::Error;
};

/// An exhaustive procedure was asked to enumerate beyond its bound.
class TooLarge : public Error {
 public:
  using Error::Error;
};

class NotMeasurable : public Error {
 public:
  using Error::Error;
};

class NotContradictory : public Error {
 public:
  using Error::Error;
};

}  // namespace choicectx
