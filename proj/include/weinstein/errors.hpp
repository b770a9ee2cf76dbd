#pragma once

#include <stdexcept>
#include <string>

namespace weinstein {

/// Argument outside the mathematical domain of an operation (negative
/// abscissa, non-positive scale, mismatched grids, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation requested outside the regime an algorithm supports.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// Invalid grid, plan or run configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed field file or config file. Carries the offending line (1-based,
/// 0 when not attributable to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace weinstein
