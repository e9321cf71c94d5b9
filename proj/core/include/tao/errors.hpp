#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tao {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed automaton: undeclared identifiers, disjunctive invariants, ...
class ModelError : public Error {
public:
  using Error::Error;
};

/// The zero valuation violates the initial invariant, so no semantic graph exists.
class UndefinedSemanticsError : public Error {
public:
  using Error::Error;
};

class DeterminismError : public Error {
public:
  using Error::Error;
};

/// Bad observation config, unknown language predicate, wrong secret kind for a check.
class ConfigError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line), column_(column)
  {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace tao
