#pragma once

#include <string_view>
#include <vector>

#include "germ/poly/polynomial.hpp"

namespace germ {

/// Syntax error carrying a 1-based column within the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : Error(what + " at column " + std::to_string(column)), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Grammar: sums of products of powers. `^` takes a non-negative integer,
/// `*` may be omitted between factors, `/` only divides by a nonzero
/// constant, numbers may be decimals. With complex_mode the identifier `i`
/// denotes the imaginary unit and cannot be a variable.
Polynomial parse_polynomial(std::string_view text, const Variables& vars, bool complex_mode = false);

/// Comma-separated list; empty text gives an empty list.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const Variables& vars,
                                              bool complex_mode = false);

}  // namespace germ
