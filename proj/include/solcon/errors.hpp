#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace solcon {

/// Base of every error raised by the library. `code()` is a short stable
/// identifier used by the CLI error object.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message, std::string context = {})
      : std::runtime_error(message), code_(std::move(code)), context_(std::move(context)) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& context() const noexcept { return context_; }

 private:
  std::string code_;
  std::string context_;
};

/// Bad input: malformed permutations, degree mismatch, invalid parameters.
class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& message, std::string context = {})
      : Error("invalid-argument", message, std::move(context)) {}
  ArgumentError(std::string code, const std::string& message, std::string context)
      : Error(std::move(code), message, std::move(context)) {}
};

/// A configured budget (order, degree, pair count) would be exceeded.
/// Raised instead of returning a possibly wrong answer.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& message, std::string context = {})
      : Error("budget-exceeded", message, std::move(context)) {}
};

/// Parse failure in a generator file, with 1-based line/column.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("parse-error", message,
              "line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Configurable limits. Exceeding any of them raises ResourceError.
struct Budget {
  /// Largest group order for which full element enumeration is allowed.
  std::uint64_t max_enumeration_order = 2'000'000;
  /// Largest permutation degree accepted by group construction.
  std::size_t max_degree = 256;
  /// Largest group order for the subgroup-lattice oracle.
  std::uint64_t max_subgroup_order = 2000;
  /// Largest number of (a, b) solubility tests in a single pair loop.
  std::uint64_t max_pairs = 100'000'000;
  /// Worker threads for pair loops; 0 means hardware concurrency.
  unsigned jobs = 0;

  unsigned effective_jobs() const;
};

}  // namespace solcon
