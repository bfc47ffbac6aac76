#include <cctype>
#include <optional>
#include <random>

#include "kcert/calculus.hpp"
#include "kcert/parser.hpp"
#include "support.hpp"

using namespace kcert;
using kcert::test::q;

namespace {

const Variables kVars{"x", "y", "z"};

MultiPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(0, 30);
  std::uniform_int_distribution<unsigned> exp(0, 7);
  std::uniform_int_distribution<long> coeff(-1000000, 1000000);
  MultiPoly p(kVars);
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m(3);
    for (std::size_t j = 0; j < 3; ++j) m.set(j, exp(rng));
    p.add_term(m, Rational(coeff(rng)));
  }
  return p;
}

// Independent evaluator for the same grammar at x = 2, y = -3; nullopt on a
// syntax error or undeclared symbol.
class Oracle {
 public:
  explicit Oracle(const std::string& s) : s_(s) {}

  std::optional<Rational> value() {
    auto v = expr();
    ws();
    if (!v || i_ != s_.size()) return std::nullopt;
    return v;
  }

 private:
  void ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at(char c) {
    ws();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool starts_base() {
    ws();
    return i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '(');
  }

  std::optional<Rational> expr() {
    const bool neg = at('-');
    if (neg) ++i_;
    auto acc = term();
    if (!acc) return std::nullopt;
    Rational v = neg ? Rational(-*acc) : *acc;
    while (at('+') || at('-')) {
      const char op = s_[i_++];
      auto t = term();
      if (!t) return std::nullopt;
      v = op == '+' ? Rational(v + *t) : Rational(v - *t);
    }
    return v;
  }

  std::optional<Rational> term() {
    auto acc = factor();
    if (!acc) return std::nullopt;
    Rational v = *acc;
    for (;;) {
      if (at('*')) {
        ++i_;
      } else if (!starts_base()) {
        break;
      }
      auto f = factor();
      if (!f) return std::nullopt;
      v *= *f;
    }
    return v;
  }

  std::optional<Rational> factor() {
    auto b = base();
    if (!b) return std::nullopt;
    if (!at('^')) return b;
    ++i_;
    ws();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) return std::nullopt;
    const Integer e(s_.substr(start, i_ - start));
    if (e > 64) return std::nullopt;
    Rational r = 1;
    for (unsigned long k = 0; k < e.get_ui(); ++k) r *= *b;
    return r;
  }

  std::optional<Rational> base() {
    ws();
    if (i_ >= s_.size()) return std::nullopt;
    const char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return Rational(Integer(s_.substr(start, i_ - start)));
    }
    if (c == '(') {
      ++i_;
      auto v = expr();
      if (!v || !at(')')) return std::nullopt;
      ++i_;
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      const std::string name = s_.substr(start, i_ - start);
      if (name == "x") return Rational(2);
      if (name == "y") return Rational(-3);
      if (name == "z") return Rational(5);
      return std::nullopt;
    }
    return std::nullopt;
  }

  std::string s_;
  std::size_t i_ = 0;
};

}  // namespace

TEST_CASE("render then parse is the identity on 200 random polynomials") {
  std::mt19937_64 rng(0xC0FFEE);
  for (int i = 0; i < 200; ++i) {
    const MultiPoly p = random_poly(rng);
    const std::string text = p.to_string();
    CAPTURE(text);
    CHECK(parse_expression(text, kVars) == p);
  }
}

TEST_CASE("juxtaposition and explicit products agree") {
  CHECK(parse_expression("2 x y^2 z", kVars) == parse_expression("2*x*y^2*z", kVars));
  CHECK(parse_expression("(x + 1)(y - 1)", kVars) == parse_expression("(x + 1)*(y - 1)", kVars));
  CHECK(parse_expression("3(x)2", kVars) == parse_expression("6*x", kVars));
  CHECK(parse_expression("x\n  + y", kVars) == parse_expression("x + y", kVars));
}

TEST_CASE("unary minus only at the start of an expression") {
  CHECK(parse_expression("-x + y", kVars) == parse_expression("y - x", kVars));
  CHECK(parse_expression("(-x)(-y)", kVars) == parse_expression("x y", kVars));
  CHECK_THROWS_AS(parse_expression("x * -y", kVars), ParseError);
  CHECK_THROWS_AS(parse_expression("x + -y", kVars), ParseError);
}

TEST_CASE("errors carry positions") {
  try {
    parse_expression("x + w", kVars);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 5);
    CHECK(std::string(e.what()).find("undeclared symbol 'w'") != std::string::npos);
  }
  try {
    parse_expression("x +\n  y^\n", kVars);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_expression("x^65", kVars), ParseError);
  CHECK_NOTHROW(parse_expression("x^64", kVars));
  CHECK_THROWS_AS(parse_expression("1.5 x", kVars), ParseError);
  CHECK_THROWS_AS(parse_expression("x / 2", kVars), ParseError);
  CHECK_THROWS_AS(parse_expression("(x + y", kVars), ParseError);
  CHECK_THROWS_AS(parse_expression("", kVars), ParseError);
  CHECK_THROWS_AS(parse_expression("x^y", kVars), ParseError);
}

TEST_CASE("fuzzed token streams parse to the right value or fail with a position") {
  const std::vector<std::string> tokens{"x", "y", "z", "w", "2", "13", "0", "+", "-", "*",
                                        "^", "(", ")", " ", "\n", ".", "/", "x2", "_"};
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, tokens.size() - 1);
  std::uniform_int_distribution<int> length(1, 12);
  int parsed = 0;
  for (int i = 0; i < 3000; ++i) {
    std::string s;
    const int n = length(rng);
    for (int k = 0; k < n; ++k) s += tokens[pick(rng)];
    CAPTURE(s);
    const auto expected = Oracle(s).value();
    try {
      const MultiPoly p = parse_expression(s, kVars);
      REQUIRE(expected.has_value());
      const std::vector<Rational> at{q(2), q(-3), q(5)};
      CHECK(evaluate(p, at) == *expected);
      ++parsed;
    } catch (const ParseError& e) {
      CHECK_FALSE(expected.has_value());
      CHECK(e.line() >= 1);
      CHECK(e.column() >= 1);
    }
  }
  CHECK(parsed > 100);
}
