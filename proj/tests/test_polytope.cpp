#include <cmath>

#include "kcert/calculus.hpp"
#include "kcert/delpezzo.hpp"
#include "kcert/polytope.hpp"
#include "kcert/sampler.hpp"
#include "support.hpp"

using namespace kcert;
using kcert::test::pt;
using kcert::test::q;

namespace {

Rational at(const MultiPoly& p, const std::vector<Rational>& x) { return evaluate(p, x); }

std::array<MultiPoly, 6> constant_areas(std::initializer_list<long> a) {
  std::array<MultiPoly, 6> out;
  std::size_t i = 0;
  for (long x : a) out[i++] = MultiPoly(Variables{}, Rational(x));
  return out;
}

// Green's theorem: the integral of u^a v^b over the region equals the boundary
// integral of u^(a+1) v^b / (a+1) dv, done edge by edge with Gauss-Legendre.
double green_integral(const std::vector<std::array<double, 2>>& vertices, unsigned a, unsigned b) {
  static const double nodes[] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                 -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                 0.7966664774136267,  0.9602898564975363};
  static const double weights[] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                   0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                   0.2223810344533745, 0.1012285362903763};
  double total = 0;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = vertices[i];
    const auto& r = vertices[(i + 1) % n];
    const double dv = r[1] - p[1];
    for (int k = 0; k < 8; ++k) {
      const double t = 0.5 * (nodes[k] + 1);
      const double u = p[0] + t * (r[0] - p[0]);
      const double v = p[1] + t * (r[1] - p[1]);
      total += 0.5 * weights[k] * std::pow(u, a + 1) * std::pow(v, b) / (a + 1) * dv;
    }
  }
  return total;
}

}  // namespace

TEST_CASE("the anticanonical hexagon") {
  const ParamPolygon hex = build_polygon(constant_areas({1, 1, 1, 1, 1, 1}), {});
  REQUIRE(hex.vertices.size() == 6);
  const std::array<std::array<long, 2>, 6> expected{{{1, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}, {0, 1}}};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(hex.vertices[i].u.constant_value() == expected[i][0]);
    CHECK(hex.vertices[i].v.constant_value() == expected[i][1]);
  }
  CHECK(integrate_monomial(hex, 0, 0).constant_value() == 3);
  CHECK(integrate_monomial(hex, 1, 0).constant_value() == 3);
  CHECK(integrate_monomial(hex, 0, 1).constant_value() == 3);
  CHECK(boundary_integral(hex, 0, 0).constant_value() == 6);
  const SecondMoments m = central_second_moments(hex);
  CHECK(evaluate(m.u0, std::span<const Rational>{}) == 1);
  CHECK(evaluate(m.v0, std::span<const Rational>{}) == 1);
  // central symmetry about the barycenter makes I_uu = I_vv
  CHECK(evaluate(m.Iuu, std::span<const Rational>{}) == evaluate(m.Ivv, std::span<const Rational>{}));
}

TEST_CASE("k = 2 pentagon integrals at beta = gamma = 1") {
  const ConeChart& chart = cone_chart(ChartId::K2);
  const ParamPolygon poly = build_polygon(chart.areas.a, chart.sample_point);
  const auto one = pt({q(1), q(1)});
  // vertices (0,0), (2,0), (2,1), (1,2), (0,2): a 2x2 square minus a half unit triangle
  CHECK(at(integrate_monomial(poly, 0, 0), one) == q(7, 2));
  CHECK(at(integrate_monomial(poly, 1, 0), one) == q(19, 6));
  CHECK(at(integrate_monomial(poly, 2, 0), one) == q(47, 12));
  CHECK(at(boundary_integral(poly, 0, 0), one) == 7);
  CHECK(at(boundary_integral(poly, 1, 0), one) == 6);
  CHECK(evaluate(central_second_moments(poly).u0, one) == q(19, 21));
}

TEST_CASE("closure, area and perimeter identities on every chart") {
  for (const ConeChart* chart : {&cone_chart(ChartId::K2), &cone_chart(ChartId::K3_U), &k3_full_chart()}) {
    CAPTURE(chart->name);
    const ParamPolygon poly = build_polygon(chart->areas.a, chart->sample_point);
    MultiPoly su(chart->params), sv(chart->params);
    for (std::size_t i = 0; i < 6; ++i) {
      su += poly.lengths[i] * Rational(poly.directions[i][0]);
      sv += poly.lengths[i] * Rational(poly.directions[i][1]);
    }
    CHECK(su.is_zero());
    CHECK(sv.is_zero());
    const CohClass& w = chart->omega;
    CHECK(integrate_monomial(poly, 0, 0) * Rational(2) == pair(w, w));
    CHECK(boundary_integral(poly, 0, 0) == pair(anticanonical(w.k, chart->params), w));
  }
}

TEST_CASE("exact integrals agree with a Green's theorem quadrature at 20 points") {
  const ConeChart& chart = k3_full_chart();
  const ParamPolygon poly = build_polygon(chart.areas.a, chart.sample_point);
  Sampler s(0xC0FFEE);
  const std::array<std::array<unsigned, 2>, 6> exponents{{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}};
  std::array<MultiPoly, 6> exact;
  for (std::size_t e = 0; e < 6; ++e) exact[e] = integrate_monomial(poly, exponents[e][0], exponents[e][1]);
  for (int i = 0; i < 20; ++i) {
    const AreaVector a = s.k3_class();
    const K3Coords c = coords_of(a);
    const auto x = pt({c.alpha.constant_value(), c.beta.constant_value(), c.gamma.constant_value(),
                       c.delta.constant_value()});
    std::vector<std::array<double, 2>> vertices;
    for (const auto& v : poly.vertices) vertices.push_back({at(v.u, x).get_d(), at(v.v, x).get_d()});
    for (std::size_t e = 0; e < 6; ++e) {
      const double value = at(exact[e], x).get_d();
      CHECK(green_integral(vertices, exponents[e][0], exponents[e][1]) ==
            doctest::Approx(value).epsilon(1e-10));
    }
  }
}

TEST_CASE("setting alpha = 0 reproduces the k = 2 pentagon moments") {
  const ConeChart& k3 = cone_chart(ChartId::K3_U);
  const ConeChart& k2 = cone_chart(ChartId::K2);
  const ParamPolygon p3 = build_polygon(k3.areas.a, k3.sample_point);
  const ParamPolygon p2 = build_polygon(k2.areas.a, k2.sample_point);
  const std::vector<MultiPoly> images{MultiPoly(k2.params), MultiPoly::variable(k2.params, 0),
                                      MultiPoly::variable(k2.params, 1)};
  for (unsigned a = 0; a <= 2; ++a) {
    for (unsigned b = 0; a + b <= 2; ++b) {
      CHECK(substitute(integrate_monomial(p3, a, b), images) == integrate_monomial(p2, a, b));
    }
  }
}

TEST_CASE("invalid area vectors are rejected") {
  // closure fails
  CHECK_THROWS_AS(build_polygon(constant_areas({1, 1, 1, 1, 1, 2}), {}), PolygonError);
  // negative edge
  CHECK_THROWS_AS(build_polygon(constant_areas({-1, 2, -1, 2, -1, 2}), {}), PolygonError);
  // nonlinear area
  const Variables v{"t"};
  std::array<MultiPoly, 6> bad = constant_areas({1, 1, 1, 1, 1, 1});
  for (auto& x : bad) x = embed(x, v);
  bad[0] = MultiPoly::variable(v, 0).pow(2);
  CHECK_THROWS_AS(build_polygon(bad, std::vector<Rational>{q(1)}), PolygonError);
}
