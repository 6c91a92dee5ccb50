#pragma once

#include <stdexcept>
#include <string>

namespace dgalab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent user input. Line/column are 1-based, 0 when unknown.
class InputError : public Error {
 public:
  explicit InputError(const std::string& message, int line = 0, int column = 0)
      : Error(decorate(message, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string decorate(const std::string& message, int line, int column) {
    if (line <= 0) return message;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  }

  int line_;
  int column_;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace dgalab
