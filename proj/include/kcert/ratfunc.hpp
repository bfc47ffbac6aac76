#pragma once

#include <span>
#include <string>

#include "kcert/multipoly.hpp"

namespace kcert {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Quotient of two polynomials over the same variables.
///
/// Canonical form: numerator and denominator have integer coefficients whose
/// combined gcd is 1, and the denominator's grevlex-leading coefficient is
/// positive; zero is 0/1. No polynomial gcd is ever taken, so equality is
/// decided by cross-multiplication.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(MultiPoly num);
  RatFunc(MultiPoly num, MultiPoly den);

  /// Keeps num and den verbatim (den must be nonzero); used where the exact
  /// structural denominator matters.
  static RatFunc unreduced(MultiPoly num, MultiPoly den);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  const Variables& variables() const { return num_.variables(); }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const Rational& c);
  friend RatFunc operator*(const Rational& c, const RatFunc& a) { return a * c; }
  RatFunc pow(int e) const;

  /// Cross-multiplied equality.
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  /// Divides num and den by f as many times as both stay exactly divisible.
  /// Constant f is ignored.
  RatFunc cancel_factor(const MultiPoly& f) const;

  std::string to_string() const;

 private:
  MultiPoly num_;
  MultiPoly den_;
};

/// True when p = c * q for a nonzero rational c; c is returned through `ratio`.
bool proportional(const MultiPoly& p, const MultiPoly& q, Rational* ratio = nullptr);

RatFunc substitute(const RatFunc& f, std::span<const MultiPoly> images);

}  // namespace kcert
