// Recursive-descent parser for the expression grammar of the CLI:
//   atoms   theta phi Theta Phi d_theta d_phi p q, integer/rational literals
//   infix   + - * (juxtaposition also multiplies), ^ with integer exponents
//   parens  ( ... )
// Negative exponents are allowed on p and q only.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qep/expr.hpp"

namespace qep {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line, int column)
      : std::runtime_error(std::move(message)), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

Expr parse_expr(std::string_view text);

}  // namespace qep
