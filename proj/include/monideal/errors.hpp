#ifndef MONIDEAL_ERRORS_HPP
#define MONIDEAL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monideal {

/// Precondition violated by the caller (bad dimensions, non-square-free
/// input where square-free is required, malformed text, ...).
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Exponent arithmetic left the representable range.
class ArithmeticError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

/// A configured resource budget was exceeded.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Text input could not be parsed. Line and column are 1-based.
class ParseError : public UsageError {
public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : UsageError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Limits shared by the exponential routines. Every one of them fails loudly
/// with ResourceError instead of running unbounded.
struct Budget {
  /// Largest number of monomials the witness oracle may scan.
  std::size_t max_box = std::size_t{1} << 22;
  /// Largest power t any routine will form.
  int max_power = 8;
  /// Largest number of minor specs (3^n) a minor scan may visit.
  std::size_t max_minors = std::size_t{1} << 16;
  /// Node limit for the irreducible-decomposition splitting tree.
  std::size_t max_split_nodes = std::size_t{1} << 24;
};

}  // namespace monideal

#endif  // MONIDEAL_ERRORS_HPP
