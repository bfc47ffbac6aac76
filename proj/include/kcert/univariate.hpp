#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kcert/multipoly.hpp"

namespace kcert {

/// Dense univariate polynomial, coeffs[i] multiplies x^i. No trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly from_multipoly(const MultiPoly& p);
  MultiPoly to_multipoly(const std::string& var) const;

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const;
  UniPoly derivative() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const Rational& c);
  UniPoly operator-() const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  /// Euclidean division; b must be nonzero.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  /// Monic gcd (zero if both are zero).
  static UniPoly gcd(UniPoly a, UniPoly b);

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace kcert
