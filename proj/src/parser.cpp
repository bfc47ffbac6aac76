#include "kcert/parser.hpp"

#include <cctype>

namespace kcert {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Variables& vars) : text_(text), vars_(vars) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static bool starts_base(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '_' || c == '(';
  }

  MultiPoly expr() {
    bool negate = false;
    if (peek() == '-') {
      ++pos_;
      negate = true;
    }
    MultiPoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      if (c == '+') {
        acc += term();
      } else {
        acc -= term();
      }
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (starts_base(c)) {
        acc *= factor();
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly factor() {
    MultiPoly b = base();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected exponent after '^'");
      Integer e = nat();
      if (e > kMaxParsedExponent) fail("exponent " + e.get_str() + " exceeds " + std::to_string(kMaxParsedExponent));
      b = b.pow(static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  Integer nat() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  MultiPoly base() {
    char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(c))) return MultiPoly(vars_, Rational(nat()));
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) return MultiPoly::variable(vars_, i);
      }
      pos_ = start;
      fail("undeclared symbol '" + name + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const Variables& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_expression(std::string_view text, const Variables& vars) {
  return Parser(text, vars).parse();
}

}  // namespace kcert
