#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace koszul {

/// Operands built over different generator sets or coefficient rings.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A graded piece is infinite and no exponent cap was supplied.
class NonProperGradingError : public std::runtime_error {
 public:
  NonProperGradingError(const std::string& what, std::string witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}

  /// Product of even generators of total degree zero, in canonical text form.
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// A rational function has no formal expansion in the requested region.
class NoExpansionRegionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input; line is 1-based, 0 when not line oriented.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace koszul
