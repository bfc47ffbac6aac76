#include "kcert/monomial.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace kcert {
namespace {

Monomial::Exponent checked(unsigned long e) {
  if (e > std::numeric_limits<Monomial::Exponent>::max()) {
    throw std::overflow_error("monomial exponent overflow: " + std::to_string(e));
  }
  return static_cast<Monomial::Exponent>(e);
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : size_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVariables) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables");
  }
}

Monomial::Monomial(std::initializer_list<unsigned> exponents) : Monomial(exponents.size()) {
  std::size_t i = 0;
  for (unsigned e : exponents) exponents_[i++] = checked(e);
}

void Monomial::set(std::size_t i, unsigned e) { exponents_[i] = checked(e); }

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (std::size_t i = 0; i < size_; ++i) d += exponents_[i];
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < size_; ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i) {
    r.exponents_[i] = checked(static_cast<unsigned long>(a.exponents_[i]) + b.exponents_[i]);
  }
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i) {
    if (b.exponents_[i] > a.exponents_[i]) throw std::domain_error("monomial does not divide");
    r.exponents_[i] = static_cast<Monomial::Exponent>(a.exponents_[i] - b.exponents_[i]);
  }
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = size_;
  for (std::size_t i = 0; i < size_; ++i) {
    h = h * 0x9E3779B97F4A7C15ULL + exponents_[i] + 1;
    h ^= h >> 29;
  }
  return h;
}

bool GrevlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = a.degree();
  unsigned db = b.degree();
  if (da != db) return da > db;
  // Tie: the one with the smaller exponent in the last differing variable wins.
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace kcert
