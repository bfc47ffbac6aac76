#include "kcert/sampler.hpp"

namespace kcert {
namespace {

MultiPoly constant(const Rational& c) { return MultiPoly(Variables{}, c); }

}  // namespace

Rational Sampler::positive() {
  std::uniform_int_distribution<int> dist(1, 1000);
  const int num = dist(rng_);
  const int den = dist(rng_);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational Sampler::signed_value() {
  const bool negative = (rng_() & 1U) != 0;
  Rational q = positive();
  return negative ? Rational(-q) : q;
}

std::vector<Rational> Sampler::k2_point() { return {positive(), positive()}; }

std::vector<Rational> Sampler::k3_point() { return {positive(), positive(), positive()}; }

AreaVector numeric_areas(const Rational& alpha, const Rational& beta, const Rational& gamma, const Rational& delta) {
  return areas_of(K3Coords{constant(alpha), constant(beta), constant(gamma), constant(delta)});
}

bool strictly_inside(const AreaVector& numeric) {
  for (const auto& a : numeric.a) {
    if (a.constant_value() <= 0) return false;
  }
  return true;
}

AreaVector Sampler::k3_class() {
  const unsigned domain = rotation_++ % 3;
  for (;;) {
    const Rational a = positive();
    const Rational b = positive();
    const Rational g = positive();
    Rational d = 0;
    if (domain == 0) d = positive();
    if (domain == 1) d = -positive();
    AreaVector v = numeric_areas(a, b, g, d);
    if (strictly_inside(v)) return v;
  }
}

AreaVector Sampler::k3_class_in_V_or_W() {
  const bool in_w = (rotation_++ % 2) == 1;
  for (;;) {
    const Rational a = positive();
    AreaVector v = in_w ? numeric_areas(a, a, a, signed_value()) : numeric_areas(a, positive(), positive(), 0);
    if (strictly_inside(v)) return v;
  }
}

}  // namespace kcert
