#include <random>

#include "kcert/calculus.hpp"
#include "kcert/kernels.hpp"
#include "kcert/parser.hpp"
#include "kcert/univariate.hpp"
#include "support.hpp"

using namespace kcert;
using kcert::test::pt;
using kcert::test::q;

namespace {

const Variables kXY{"x", "y"};
const Variables kXYZ{"x", "y", "z"};

MultiPoly P(const char* text, const Variables& v = kXY) { return parse_expression(text, v); }

MultiPoly random_poly(std::mt19937_64& rng, const Variables& vars, int max_terms, unsigned max_exp, long max_coeff) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::uniform_int_distribution<long> coeff(-max_coeff, max_coeff);
  MultiPoly p(vars);
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m(vars.size());
    for (std::size_t j = 0; j < vars.size(); ++j) m.set(j, exp(rng));
    p.add_term(m, Rational(coeff(rng)));
  }
  return p;
}

// Rebuilds p term by term in reverse order and with split coefficients.
MultiPoly rebuilt(const MultiPoly& p) {
  MultiPoly out(p.variables());
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    out.add_term(it->first, it->second / 3);
    out.add_term(it->first, it->second * 2 / 3);
  }
  return out;
}

}  // namespace

TEST_CASE("rationals cross the boundary only as p/q or integers") {
  CHECK(parse_rational("2919/409") == q(2919, 409));
  CHECK(parse_rational("-16/25") == q(-16, 25));
  CHECK(parse_rational("6/4") == q(3, 2));
  CHECK(parse_rational("+7") == q(7));
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("/3"), std::invalid_argument);
}

TEST_CASE("pi scalars refuse to add across powers") {
  const PiScalar a(q(1, 2), -2);
  const PiScalar b(q(1, 3), -2);
  CHECK((a + b) == PiScalar(q(5, 6), -2));
  CHECK_THROWS_AS(a + PiScalar(q(1), 0), PiPowerMismatch);
  CHECK_THROWS_AS(a - PiScalar(q(1), 1), PiPowerMismatch);
  CHECK((a * PiScalar(q(4), 2)) == PiScalar(q(2), 0));
  CHECK((a / PiScalar(q(1, 2), -2)) == PiScalar(q(1), 0));
  // zero carries no power
  CHECK((a + PiScalar()) == a);
  CHECK((a - a).pi_power() == 0);
  CHECK(a.to_string() == "1/2*pi^-2");
}

TEST_CASE("expansion of (1 + beta)(1 - beta)") {
  const Variables v{"beta"};
  const MultiPoly p = P("(1 + beta)(1 - beta)", v);
  CHECK(p == P("1 - beta^2", v));
  CHECK(p.to_string() == "-beta^2 + 1");
  CHECK(p.total_degree() == 2);
}

TEST_CASE("canonical form does not depend on construction order") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const MultiPoly p = random_poly(rng, kXYZ, 20, 4, 50);
    const MultiPoly r = rebuilt(p);
    CHECK(r == p);
    CHECK(r.to_string() == p.to_string());
    CHECK(rebuilt(r).to_string() == r.to_string());
  }
}

TEST_CASE("rational function canonicalization is idempotent") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    MultiPoly d = random_poly(rng, kXY, 4, 2, 9);
    if (d.is_zero()) continue;
    const RatFunc f(random_poly(rng, kXY, 6, 3, 20) * q(3, 7), d * q(-5, 2));
    const RatFunc g(f.num(), f.den());
    CHECK(g.num() == f.num());
    CHECK(g.den() == f.den());
    CHECK(g.to_string() == f.to_string());
    // integer coefficients with no common content across numerator and denominator
    CHECK(coefficient_denominator_lcm(f.num()) == 1);
    CHECK(coefficient_denominator_lcm(f.den()) == 1);
    const Integer content = gcd(coefficient_numerator_gcd(f.num()), coefficient_numerator_gcd(f.den()));
    CHECK((f.num().is_zero() || content == 1));
  }
}

TEST_CASE("cross-multiplied equality is an equivalence and a/b * b/a = 1") {
  const MultiPoly a = P("x^2 + 3 x y + 1");
  const MultiPoly b = P("2 y - x + 4");
  const MultiPoly c = P("x + y + 1");
  const RatFunc f(a, b);
  const RatFunc g(a * c, b * c);
  const RatFunc h(a * c * c * q(5), b * c * c * q(5));
  CHECK(f == f);
  CHECK(f == g);
  CHECK(g == f);
  CHECK(g == h);
  CHECK(f == h);
  CHECK_FALSE(f == RatFunc(b, a));
  CHECK((RatFunc(a, b) * RatFunc(b, a)) == RatFunc(MultiPoly(kXY, 1)));
  CHECK(g.cancel_factor(c) == f);
  CHECK(proportional(g.cancel_factor(c).den(), b));
}

TEST_CASE("exact division") {
  const MultiPoly a = P("x^2 + 3 x y + 1");
  const MultiPoly b = P("2 y - x + 4");
  const auto quotient = divide_exact(a * b, b);
  REQUIRE(quotient.has_value());
  CHECK(*quotient == a);
  CHECK_FALSE(divide_exact(a * b + MultiPoly(kXY, 1), b).has_value());
  CHECK_THROWS(divide_exact(a, MultiPoly(kXY)));
}

TEST_CASE("mixing variable lists is an error") {
  CHECK_THROWS_AS(P("x") + P("x", kXYZ), VariableMismatch);
  CHECK(embed(P("x + y"), kXYZ) == P("x + y", kXYZ));
}

TEST_CASE("directional second derivative matches interpolation on the line") {
  // g(t) = p(x + t v) has degree <= 4, so its values at t = -2..2 fix g''(0).
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> small(-3, 3);
  std::uniform_int_distribution<long> den(1, 7);
  for (int iter = 0; iter < 40; ++iter) {
    const MultiPoly p = random_poly(rng, kXYZ, 12, 2, 30);
    if (p.total_degree() > 4) continue;
    const std::vector<int> v{static_cast<int>(small(rng)), static_cast<int>(small(rng)), static_cast<int>(small(rng))};
    const std::vector<Rational> x{q(small(rng), den(rng)), q(small(rng), den(rng)), q(small(rng), den(rng))};
    std::vector<Rational> g;
    for (int t = -2; t <= 2; ++t) {
      std::vector<Rational> y = x;
      for (int j = 0; j < 3; ++j) y[j] += t * v[j];
      g.push_back(evaluate(p, y));
    }
    // second derivative at 0 of the quartic through (t, g(t)), t = -2..2
    const Rational expected = (-g[0] + 16 * g[1] - 30 * g[2] + 16 * g[3] - g[4]) / 12;
    const RatFunc d2 = directional_second_derivative(RatFunc(p), v);
    CHECK(evaluate(d2, x) == expected);
  }
}

TEST_CASE("second derivative of a quotient along a line") {
  // f = 1 / (x + y) along (1, 1): f(t) = 1 / (s + 2t), f'' = 8 / s^3
  const RatFunc f(MultiPoly(kXY, 1), P("x + y"));
  const std::vector<int> v{1, 1};
  const RatFunc d2 = directional_second_derivative(f, v);
  CHECK(evaluate(d2, pt({q(1), q(2)})) == q(8, 27));
  CHECK(d2 == RatFunc(MultiPoly(kXY, 8), P("(x + y)^3")));
  CHECK_THROWS_AS(evaluate(f, pt({q(1), q(-1)})), DomainError);
}

TEST_CASE("nonnegative coefficients imply positivity at positive points") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(1, 1000);
  for (int iter = 0; iter < 20; ++iter) {
    MultiPoly p = random_poly(rng, kXYZ, 15, 3, 100);
    MultiPoly nonneg(kXYZ);
    for (const auto& [m, c] : p.terms()) nonneg.add_term(m, abs(c));
    if (nonneg.is_zero()) continue;
    REQUIRE(coefficients_all_nonneg(nonneg).all_nonneg);
    for (int k = 0; k < 20; ++k) {
      const auto x = pt({q(num(rng), num(rng)), q(num(rng), num(rng)), q(num(rng), num(rng))});
      CHECK(evaluate(nonneg, x) > 0);
    }
  }
  const NonnegCheck bad = coefficients_all_nonneg(P("x^2 - 3 x y + y^2"));
  CHECK_FALSE(bad.all_nonneg);
  CHECK(bad.min_coefficient == q(-3));
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->second == Monomial{1, 1});
}

TEST_CASE("serial and parallel kernels agree exactly") {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 10; ++iter) {
    const MultiPoly a = random_poly(rng, kXYZ, 60, 6, 1000) * q(1, 6);
    const MultiPoly b = random_poly(rng, kXYZ, 60, 6, 1000) * q(5, 14);
    CHECK(kernels::multiply_serial(a, b) == kernels::multiply_parallel(a, b));
    CHECK(kernels::multiply_serial(a, b) == a * b);
    std::vector<std::vector<Rational>> points;
    std::uniform_int_distribution<long> num(-50, 50);
    for (int k = 0; k < 25; ++k) points.push_back(pt({q(num(rng), 7), q(num(rng), 3), q(num(rng), 11)}));
    CHECK(kernels::evaluate_batch_serial(a, points) == kernels::evaluate_batch_parallel(a, points));
  }
  const auto form = kernels::to_integer_form(P("x + 1") * q(1, 6) + P("y") * q(1, 4));
  CHECK(form.denominator == 12);
}

TEST_CASE("univariate arithmetic") {
  const UniPoly p({q(-1), q(0), q(1)});  // x^2 - 1
  const UniPoly r({q(1), q(1)});         // x + 1
  CHECK(p(q(3)) == q(8));
  CHECK(p.derivative() == UniPoly({q(0), q(2)}));
  const auto [quot, rem] = UniPoly::divmod(p, r);
  CHECK(quot == UniPoly({q(-1), q(1)}));
  CHECK(rem.is_zero());
  CHECK(UniPoly::gcd(p * UniPoly({q(2), q(1)}), r * UniPoly({q(5), q(1)})) == r);
  CHECK(UniPoly::from_multipoly(P("beta^3 - 2", Variables{"beta"})).degree() == 3);
}
