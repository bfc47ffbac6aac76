#include "kcert/univariate.hpp"

namespace kcert {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::from_multipoly(const MultiPoly& p) {
  if (p.nvars() > 1) throw std::invalid_argument("expected a polynomial in one variable");
  std::vector<Rational> c;
  for (const auto& [m, coef] : p.terms()) {
    unsigned e = p.nvars() == 0 ? 0 : m[0];
    if (c.size() <= e) c.resize(e + 1);
    c[e] = coef;
  }
  return UniPoly(std::move(c));
}

MultiPoly UniPoly::to_multipoly(const std::string& var) const {
  MultiPoly p(Variables{var});
  for (std::size_t i = 0; i < c_.size(); ++i) p.add_term(Monomial{static_cast<unsigned>(i)}, c_[i]);
  return p;
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
  return UniPoly(std::move(d));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const Rational& s) {
  UniPoly r = a;
  for (auto& x : r.c_) x *= s;
  r.trim();
  return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quot;
  const int db = b.degree();
  if (a.degree() >= db) quot.resize(static_cast<std::size_t>(a.degree() - db + 1));
  for (int k = a.degree() - db; k >= 0; --k) {
    const auto top = static_cast<std::size_t>(k + db);
    Rational q = rem[top] / b.leading();
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.c_[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * Rational(1 / a.leading());
}

}  // namespace kcert
