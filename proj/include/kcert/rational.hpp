#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace kcert {

/// Exact rational number; GMP keeps it reduced with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses `p/q` or an integer (optional leading sign). Decimals are rejected.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

int sign(const Rational& q);

/// Rational mantissa times an integer power of pi. Zero is always 0 * pi^0.
class PiScalar {
 public:
  PiScalar() = default;
  PiScalar(Rational mantissa, int pi_power);

  const Rational& mantissa() const { return mantissa_; }
  int pi_power() const { return pi_power_; }
  bool is_zero() const { return mantissa_ == 0; }

  // Zero is the additive identity for every power; otherwise powers must agree.
  friend PiScalar operator+(const PiScalar& a, const PiScalar& b);
  friend PiScalar operator-(const PiScalar& a, const PiScalar& b);
  friend PiScalar operator*(const PiScalar& a, const PiScalar& b);
  friend PiScalar operator/(const PiScalar& a, const PiScalar& b);
  friend bool operator==(const PiScalar& a, const PiScalar& b) = default;

  std::string to_string() const;

 private:
  Rational mantissa_{0};
  int pi_power_ = 0;
};

class PiPowerMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace kcert
