#include "kcert/ratfunc.hpp"

#include "kcert/calculus.hpp"

namespace kcert {
namespace {

// Integer coefficients, combined content 1, den leading coefficient > 0.
void canonicalize(MultiPoly& num, MultiPoly& den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  num.require_same_variables(den, "rational function");
  if (num.is_zero()) {
    den = MultiPoly(den.variables(), 1);
    return;
  }
  Integer l = coefficient_denominator_lcm(num);
  Integer ld = coefficient_denominator_lcm(den);
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), ld.get_mpz_t());
  Integer g = coefficient_numerator_gcd(num * Rational(l));
  Integer gd = coefficient_numerator_gcd(den * Rational(l));
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gd.get_mpz_t());
  Rational scale(l, g);
  scale.canonicalize();
  if (den.leading_coefficient() < 0) scale = -scale;
  num *= scale;
  den *= scale;
}

}  // namespace

RatFunc::RatFunc(MultiPoly num) : num_(std::move(num)), den_(num_.variables(), 1) {
  canonicalize(num_, den_);
}

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  canonicalize(num_, den_);
}

RatFunc RatFunc::unreduced(MultiPoly num, MultiPoly den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  num.require_same_variables(den, "rational function");
  RatFunc f;
  f.num_ = std::move(num);
  f.den_ = std::move(den);
  return f;
}

RatFunc RatFunc::operator-() const { return unreduced(-num_, den_); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  Rational ratio;
  if (proportional(b.den_, a.den_, &ratio)) {
    // b.den = ratio * a.den
    return RatFunc(a.num_ * ratio + b.num_, b.den_);
  }
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.num_.is_zero()) throw DomainError("division by the zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc operator*(const RatFunc& a, const Rational& c) { return RatFunc(a.num_ * c, a.den_); }

RatFunc RatFunc::pow(int e) const {
  if (e == 0) return RatFunc(MultiPoly(variables(), 1));
  if (e < 0) {
    if (num_.is_zero()) throw DomainError("negative power of zero");
    return RatFunc(den_.pow(static_cast<unsigned>(-e)), num_.pow(static_cast<unsigned>(-e)));
  }
  return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (!a.num_.same_variables(b.num_)) return false;
  Rational ratio;
  if (proportional(b.den_, a.den_, &ratio)) return a.num_ * ratio == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFunc RatFunc::cancel_factor(const MultiPoly& f) const {
  if (f.is_constant()) return *this;
  MultiPoly n = num_;
  MultiPoly d = den_;
  for (;;) {
    auto qd = divide_exact(d, f);
    if (!qd) break;
    auto qn = divide_exact(n, f);
    if (!qn) break;
    n = std::move(*qn);
    d = std::move(*qd);
  }
  return RatFunc(std::move(n), std::move(d));
}

std::string RatFunc::to_string() const {
  if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

bool proportional(const MultiPoly& p, const MultiPoly& q, Rational* ratio) {
  if (!p.same_variables(q) || p.size() != q.size() || q.is_zero()) return false;
  Rational r = p.leading_coefficient() / q.leading_coefficient();
  auto ip = p.terms().begin();
  for (auto iq = q.terms().begin(); iq != q.terms().end(); ++iq, ++ip) {
    if (!(ip->first == iq->first) || ip->second != r * iq->second) return false;
  }
  if (ratio != nullptr) *ratio = r;
  return true;
}

RatFunc substitute(const RatFunc& f, std::span<const MultiPoly> images) {
  return RatFunc(substitute(f.num(), images), substitute(f.den(), images));
}

}  // namespace kcert
