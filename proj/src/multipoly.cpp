#include "kcert/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "kcert/kernels.hpp"

namespace kcert {
namespace {

const std::shared_ptr<const Variables>& empty_variables() {
  static const auto empty = std::make_shared<const Variables>();
  return empty;
}

}  // namespace

MultiPoly::MultiPoly() : vars_(empty_variables()) {}

MultiPoly::MultiPoly(Variables vars) : vars_(std::make_shared<const Variables>(std::move(vars))) {
  if (vars_->size() > kMaxVariables) {
    throw std::invalid_argument("too many variables for a Monomial");
  }
}

MultiPoly::MultiPoly(Variables vars, const Rational& c) : MultiPoly(std::move(vars)) {
  add_term(Monomial(nvars()), c);
}

MultiPoly MultiPoly::variable(const Variables& vars, std::size_t index) {
  MultiPoly p(vars);
  if (index >= vars.size()) throw UnknownVariable("variable index out of range");
  Monomial m(vars.size());
  m.set(index, 1);
  p.add_term(m, 1);
  return p;
}

MultiPoly MultiPoly::variable(const Variables& vars, const std::string& name) {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw UnknownVariable("unknown variable '" + name + "'");
  return variable(vars, static_cast<std::size_t>(it - vars.begin()));
}

std::size_t MultiPoly::index_of(const std::string& name) const {
  auto it = std::find(vars_->begin(), vars_->end(), name);
  if (it == vars_->end()) throw UnknownVariable("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - vars_->begin());
}

bool MultiPoly::same_variables(const MultiPoly& other) const {
  return vars_ == other.vars_ || *vars_ == *other.vars_;
}

void MultiPoly::require_same_variables(const MultiPoly& o, const char* op) const {
  if (!same_variables(o)) {
    throw VariableMismatch(std::string("variable lists differ in ") + op);
  }
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::constant_value() const {
  if (!is_constant()) throw std::domain_error("polynomial is not constant: " + to_string());
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

unsigned MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& MultiPoly::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Rational& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.begin()->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (m.size() != nvars()) throw std::invalid_argument("monomial arity mismatch");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_variables(o, "addition");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_variables(o, "subtraction");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_variables(b, "multiplication");
  if (a.size() * b.size() >= kernels::kParallelMultiplyThreshold) {
    return kernels::multiply_parallel(a, b);
  }
  return kernels::multiply_serial(a, b);
}

MultiPoly operator+(MultiPoly a, const Rational& c) {
  a.add_term(Monomial(a.nvars()), c);
  return a;
}

MultiPoly operator-(MultiPoly a, const Rational& c) {
  a.add_term(Monomial(a.nvars()), -c);
  return a;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(variables(), 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.same_variables(b) && a.terms_ == b.terms_;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool negative = c < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    Rational mag = abs(c);
    bool unit_monomial = m.is_one();
    if (unit_monomial || mag != 1) {
      out << mag.get_str();
      if (!unit_monomial) out << '*';
    }
    bool first_factor = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!first_factor) out << '*';
      first_factor = false;
      out << (*vars_)[i];
      if (m[i] > 1) out << '^' << m[i];
    }
  }
  return out.str();
}

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q) {
  p.require_same_variables(q, "division");
  if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
  MultiPoly quotient(p.variables());
  MultiPoly rest = p;
  const Monomial& lead_q = q.leading_monomial();
  const Rational& lc_q = q.leading_coefficient();
  while (!rest.is_zero()) {
    const Monomial lead_r = rest.leading_monomial();
    if (!lead_q.divides(lead_r)) return std::nullopt;
    Monomial t = lead_r / lead_q;
    Rational c = rest.leading_coefficient() / lc_q;
    quotient.add_term(t, c);
    for (const auto& [m, coef] : q.terms()) rest.add_term(m * t, -c * coef);
  }
  return quotient;
}

MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> images) {
  if (images.size() != p.nvars() || images.empty()) {
    throw std::invalid_argument("substitute: need one image per variable");
  }
  const Variables& target = images.front().variables();
  for (const auto& img : images) {
    if (img.variables() != target) throw VariableMismatch("substitute: images disagree");
  }
  std::vector<std::vector<MultiPoly>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    powers[i].push_back(MultiPoly(target, 1));
  }
  auto power = [&](std::size_t var, unsigned e) -> const MultiPoly& {
    auto& cache = powers[var];
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };
  MultiPoly result(target);
  for (const auto& [m, c] : p.terms()) {
    MultiPoly term(target, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0) term = term * power(i, m[i]);
    }
    result += term;
  }
  return result;
}

MultiPoly embed(const MultiPoly& p, const Variables& target) {
  std::vector<std::size_t> where;
  for (const auto& name : p.variables()) {
    auto it = std::find(target.begin(), target.end(), name);
    if (it == target.end()) throw UnknownVariable("embed: '" + name + "' missing in target");
    where.push_back(static_cast<std::size_t>(it - target.begin()));
  }
  MultiPoly r(target);
  for (const auto& [m, c] : p.terms()) {
    Monomial n(target.size());
    for (std::size_t i = 0; i < m.size(); ++i) n.set(where[i], m[i]);
    r.add_term(n, c);
  }
  return r;
}

Integer coefficient_denominator_lcm(const MultiPoly& p) {
  Integer l = 1;
  for (const auto& [m, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

Integer coefficient_numerator_gcd(const MultiPoly& p) {
  Integer g = 0;
  for (const auto& [m, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  return g;
}

}  // namespace kcert
