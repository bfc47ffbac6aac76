#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "kcert/multipoly.hpp"

namespace kcert {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

inline constexpr unsigned kMaxParsedExponent = 64;

// Grammar (whitespace and newlines ignored):
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := base ('^' nat)?
//   base   := nat | symbol | '(' expr ')'
// Symbols must be among `vars`.
MultiPoly parse_expression(std::string_view text, const Variables& vars);

}  // namespace kcert
