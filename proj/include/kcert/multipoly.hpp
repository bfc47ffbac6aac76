#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kcert/monomial.hpp"
#include "kcert/rational.hpp"

namespace kcert {

using Variables = std::vector<std::string>;

class VariableMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownVariable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sparse polynomial over Q in a fixed, ordered list of variables.
///
/// Terms are kept in a map sorted by descending grevlex order, so iteration
/// order is the canonical printing order. Zero coefficients are never stored.
/// Binary operations require identical variable lists.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrevlexGreater>;

  MultiPoly();
  explicit MultiPoly(Variables vars);
  MultiPoly(Variables vars, const Rational& c);

  static MultiPoly variable(const Variables& vars, std::size_t index);
  static MultiPoly variable(const Variables& vars, const std::string& name);

  const Variables& variables() const { return *vars_; }
  std::size_t nvars() const { return vars_->size(); }
  std::size_t index_of(const std::string& name) const;
  bool same_variables(const MultiPoly& other) const;

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant polynomial; throws otherwise.
  Rational constant_value() const;

  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;

  Rational coefficient(const Monomial& m) const;
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  void add_term(const Monomial& m, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator+(MultiPoly a, const Rational& c);
  friend MultiPoly operator-(MultiPoly a, const Rational& c);
  MultiPoly operator-() const;

  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Canonical text: grevlex order, explicit `*` and `^`, e.g. `3*beta^2 - gamma + 1/2`.
  std::string to_string() const;

  void require_same_variables(const MultiPoly& o, const char* op) const;

 private:
  std::shared_ptr<const Variables> vars_;
  TermMap terms_;
};

/// Exact quotient p / q if q divides p, otherwise nullopt. q must be nonzero.
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q);

/// Substitutes images[i] (all over one common variable list) for variable i of p.
MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> images);

/// Re-expresses p over a new variable list that contains all of p's variables.
MultiPoly embed(const MultiPoly& p, const Variables& target);

/// lcm of coefficient denominators, and gcd of coefficient numerators.
Integer coefficient_denominator_lcm(const MultiPoly& p);
Integer coefficient_numerator_gcd(const MultiPoly& p);

}  // namespace kcert
