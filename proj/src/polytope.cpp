#include "kcert/polytope.hpp"

#include "kcert/calculus.hpp"

namespace kcert {
namespace {

MultiPoly scaled(const MultiPoly& p, int c) { return p * Rational(c); }

// Parameters followed by one or two integration variables.
Variables extended(const Variables& params, std::initializer_list<const char*> extra) {
  if (params.size() + extra.size() > kMaxVariables)
    throw PolygonError("too many parameters for polygon integration");
  Variables v = params;
  for (const char* e : extra) v.emplace_back(e);
  return v;
}

Rational factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

}  // namespace

std::string ParamPolygon::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i > 0) s += ", ";
    s += "(" + vertices[i].u.to_string() + ", " + vertices[i].v.to_string() + ")";
  }
  return s;
}

ParamPolygon build_polygon(const std::array<MultiPoly, 6>& areas, std::span<const Rational> sample_point) {
  const Variables& params = areas[0].variables();
  for (const auto& a : areas) {
    areas[0].require_same_variables(a, "polygon areas");
    if (a.total_degree() > 1) throw PolygonError("area " + a.to_string() + " is not affine");
  }
  if (sample_point.size() != params.size())
    throw PolygonError("sample point length does not match the parameter count");

  ParamPolygon poly;
  poly.sample_point.assign(sample_point.begin(), sample_point.end());
  // Edge i of the boundary walk carries area slot i+1, the last edge slot 0.
  for (std::size_t i = 0; i < 6; ++i) {
    poly.lengths.push_back(areas[(i + 1) % 6]);
    poly.directions.push_back(kFanDirections[i]);
  }
  AffinePoint p{areas[0], MultiPoly(params)};
  for (std::size_t i = 0; i < 6; ++i) {
    poly.vertices.push_back(p);
    p.u += scaled(poly.lengths[i], poly.directions[i][0]);
    p.v += scaled(poly.lengths[i], poly.directions[i][1]);
  }
  if (!(p.u == poly.vertices[0].u) || !(p.v == poly.vertices[0].v))
    throw PolygonError("boundary does not close: residual (" + (p.u - poly.vertices[0].u).to_string() +
                       ", " + (p.v - poly.vertices[0].v).to_string() + ")");

  for (std::size_t i = 0; i < 6; ++i) {
    if (evaluate(poly.lengths[i], sample_point) < 0)
      throw PolygonError("edge " + std::to_string(i) + " has negative length at the sample point");
  }
  // The fan turns counter-clockwise, so nonnegative lengths give a convex CCW
  // boundary; it remains to rule out a collapsed polygon.
  if (evaluate(integrate_monomial(poly, 0, 0), sample_point) <= 0)
    throw PolygonError("polygon has no interior at the sample point");
  return poly;
}

MultiPoly integrate_monomial(const ParamPolygon& poly, unsigned a, unsigned b) {
  const Variables& params = poly.parameters();
  const Variables ext = extended(params, {"_s", "_t"});
  const std::size_t is = params.size();
  const std::size_t it = is + 1;
  const MultiPoly s = MultiPoly::variable(ext, is);
  const MultiPoly t = MultiPoly::variable(ext, it);

  const AffinePoint& p0 = poly.vertices[0];
  const MultiPoly u0 = embed(p0.u, ext);
  const MultiPoly v0 = embed(p0.v, ext);
  MultiPoly total(params);
  for (std::size_t i = 1; i + 1 < poly.vertices.size(); ++i) {
    const MultiPoly du1 = poly.vertices[i].u - p0.u;
    const MultiPoly dv1 = poly.vertices[i].v - p0.v;
    const MultiPoly du2 = poly.vertices[i + 1].u - p0.u;
    const MultiPoly dv2 = poly.vertices[i + 1].v - p0.v;
    const MultiPoly jac = du1 * dv2 - du2 * dv1;
    if (jac.is_zero()) continue;
    const MultiPoly u = u0 + s * embed(du1, ext) + t * embed(du2, ext);
    const MultiPoly v = v0 + s * embed(dv1, ext) + t * embed(dv2, ext);
    const MultiPoly integrand = u.pow(a) * v.pow(b);
    MultiPoly simplex(params);
    for (const auto& [m, c] : integrand.terms()) {
      const unsigned i_s = m[is];
      const unsigned i_t = m[it];
      Monomial rest(params.size());
      for (std::size_t k = 0; k < params.size(); ++k) rest.set(k, m[k]);
      simplex.add_term(rest, c * factorial(i_s) * factorial(i_t) / factorial(i_s + i_t + 2));
    }
    total += jac * simplex;
  }
  return total;
}

MultiPoly boundary_integral(const ParamPolygon& poly, unsigned a, unsigned b) {
  const Variables& params = poly.parameters();
  const Variables ext = extended(params, {"_t"});
  const std::size_t it = params.size();
  const MultiPoly t = MultiPoly::variable(ext, it);
  MultiPoly total(params);
  for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
    const MultiPoly& len = poly.lengths[i];
    if (len.is_zero()) continue;
    const auto& d = poly.directions[i];
    const MultiPoly u = embed(poly.vertices[i].u, ext) + t * Rational(d[0]);
    const MultiPoly v = embed(poly.vertices[i].v, ext) + t * Rational(d[1]);
    const MultiPoly integrand = u.pow(a) * v.pow(b);
    // Group by power of t, then integrate t^k over [0, len].
    std::vector<MultiPoly> by_power;
    for (const auto& [m, c] : integrand.terms()) {
      const unsigned k = m[it];
      if (by_power.size() <= k) by_power.resize(k + 1, MultiPoly(params));
      Monomial rest(params.size());
      for (std::size_t j = 0; j < params.size(); ++j) rest.set(j, m[j]);
      by_power[k].add_term(rest, c);
    }
    MultiPoly len_pow = len;
    for (std::size_t k = 0; k < by_power.size(); ++k) {
      if (!by_power[k].is_zero()) total += by_power[k] * len_pow * Rational(1, static_cast<unsigned long>(k + 1));
      len_pow *= len;
    }
  }
  return total;
}

SecondMoments central_second_moments(const ParamPolygon& poly) {
  SecondMoments m;
  m.area = integrate_monomial(poly, 0, 0);
  if (m.area.is_zero()) throw PolygonError("polygon area vanishes identically");
  m.int_u = integrate_monomial(poly, 1, 0);
  m.int_v = integrate_monomial(poly, 0, 1);
  m.int_uu = integrate_monomial(poly, 2, 0);
  m.int_vv = integrate_monomial(poly, 0, 2);
  m.int_uv = integrate_monomial(poly, 1, 1);
  m.u0 = RatFunc(m.int_u, m.area);
  m.v0 = RatFunc(m.int_v, m.area);
  m.Iuu = RatFunc(m.area * m.int_uu - m.int_u * m.int_u, m.area);
  m.Ivv = RatFunc(m.area * m.int_vv - m.int_v * m.int_v, m.area);
  m.Iuv = RatFunc(m.area * m.int_uv - m.int_u * m.int_v, m.area);
  return m;
}

}  // namespace kcert
