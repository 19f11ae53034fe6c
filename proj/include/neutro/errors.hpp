#pragma once

#include <stdexcept>
#include <string>

namespace neutro {

/// Malformed textual input (expression, triple, set, binding or mass file).
class parse_error : public std::runtime_error {
public:
  parse_error(std::string msg, int line = 0, int column = 0)
      : std::runtime_error(std::move(msg)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

/// Domain violation while operating on well-formed values: division by zero,
/// empty clamp result, crisp-required, unbound atom, frame mismatch, total
/// conflict, unsupported connective, and the like.
class eval_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace neutro
