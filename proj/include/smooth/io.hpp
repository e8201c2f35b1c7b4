#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "smooth/ideal.hpp"

namespace smooth {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, header, unknown_identifier, exponent_overflow };

  ParseError(Kind kind, std::size_t line, std::size_t column, std::string message,
             std::vector<std::string> expected = {});

  Kind kind() const { return kind_; }
  /// 1-based position of the offending character.
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  Kind kind_;
  std::size_t line_, column_;
  std::vector<std::string> expected_;
};

/// The input file could not be read.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text format:
///   ring QQ [x,y,z]        (or F<prime>)
///   x^2 - y*z              one generator per line
///   # comment lines and blank lines are skipped
Ideal parse_ideal(std::string_view text);

/// Reads a file ("-" for standard input) and parses it. Throws InputError
/// when the file cannot be opened.
Ideal read_ideal_file(const std::string& path);

/// Parses a single expression in the given ring; `line` only labels errors.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, std::size_t line = 1);

/// Inverse of parse_ideal. Generators over QQ are scaled to integer
/// coefficients; the zero ideal prints as the single generator 0.
std::string write_ideal(const Ideal& ideal);

}  // namespace smooth
