#include "kcert/calculus.hpp"

namespace kcert {

MultiPoly partial_derivative(const MultiPoly& p, std::size_t var) {
  if (var >= p.nvars()) throw UnknownVariable("derivative: variable index out of range");
  MultiPoly r(p.variables());
  for (const auto& [m, c] : p.terms()) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d.set(var, m[var] - 1);
    r.add_term(d, c * m[var]);
  }
  return r;
}

MultiPoly partial_derivative(const MultiPoly& p, const std::string& var) {
  return partial_derivative(p, p.index_of(var));
}

MultiPoly directional_derivative(const MultiPoly& p, std::span<const int> v) {
  if (v.size() != p.nvars()) throw std::invalid_argument("direction length != variable count");
  MultiPoly r(p.variables());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) r += partial_derivative(p, i) * Rational(v[i]);
  }
  return r;
}

RatFunc directional_second_derivative(const RatFunc& f, std::span<const int> v) {
  const MultiPoly& n = f.num();
  const MultiPoly& d = f.den();
  const MultiPoly nv = directional_derivative(n, v);
  const MultiPoly dv = directional_derivative(d, v);
  const MultiPoly nvv = directional_derivative(nv, v);
  const MultiPoly dvv = directional_derivative(dv, v);
  const MultiPoly d2 = d * d;
  MultiPoly numer = nvv * d2;
  numer -= (nv * dv * d) * Rational(2);
  numer -= n * dvv * d;
  numer += (n * dv * dv) * Rational(2);
  return RatFunc::unreduced(std::move(numer), d2 * d);
}

NonnegCheck coefficients_all_nonneg(const MultiPoly& p) {
  NonnegCheck out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (first || c < out.min_coefficient) {
      out.min_coefficient = c;
      if (c < 0) out.witness = std::make_pair(c, m);
    }
    first = false;
  }
  out.all_nonneg = !out.witness.has_value();
  return out;
}

Rational evaluate(const MultiPoly& p, std::span<const Rational> point) {
  if (point.size() != p.nvars()) throw std::invalid_argument("point length != variable count");
  std::vector<std::vector<Rational>> powers(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    unsigned deg = p.degree_in(i);
    powers[i].reserve(deg + 1);
    powers[i].emplace_back(1);
    for (unsigned k = 1; k <= deg; ++k) powers[i].push_back(powers[i].back() * point[i]);
  }
  Rational sum = 0;
  Rational term;
  for (const auto& [m, c] : p.terms()) {
    term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0) term *= powers[i][m[i]];
    }
    sum += term;
  }
  return sum;
}

Rational evaluate(const RatFunc& f, std::span<const Rational> point) {
  Rational d = evaluate(f.den(), point);
  if (d == 0) throw DomainError("denominator vanishes at the evaluation point");
  return evaluate(f.num(), point) / d;
}

}  // namespace kcert
