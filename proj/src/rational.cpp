#include "kcert/rational.hpp"

#include <cctype>

namespace kcert {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "' (expected p/q or an integer)");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

int sign(const Rational& q) { return sgn(q); }

PiScalar::PiScalar(Rational mantissa, int pi_power)
    : mantissa_(std::move(mantissa)), pi_power_(mantissa_ == 0 ? 0 : pi_power) {}

PiScalar operator+(const PiScalar& a, const PiScalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.pi_power_ != b.pi_power_) {
    throw PiPowerMismatch("cannot add pi^" + std::to_string(a.pi_power_) + " and pi^" +
                          std::to_string(b.pi_power_) + " quantities");
  }
  return PiScalar(a.mantissa_ + b.mantissa_, a.pi_power_);
}

PiScalar operator-(const PiScalar& a, const PiScalar& b) {
  return a + PiScalar(-b.mantissa_, b.pi_power_);
}

PiScalar operator*(const PiScalar& a, const PiScalar& b) {
  return PiScalar(a.mantissa_ * b.mantissa_, a.pi_power_ + b.pi_power_);
}

PiScalar operator/(const PiScalar& a, const PiScalar& b) {
  if (b.is_zero()) throw std::domain_error("PiScalar division by zero");
  return PiScalar(a.mantissa_ / b.mantissa_, a.pi_power_ - b.pi_power_);
}

std::string PiScalar::to_string() const {
  std::string out = kcert::to_string(mantissa_);
  if (pi_power_ != 0) out += "*pi^" + std::to_string(pi_power_);
  return out;
}

}  // namespace kcert
