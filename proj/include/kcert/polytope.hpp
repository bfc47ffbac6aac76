#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kcert/ratfunc.hpp"

namespace kcert {

class PolygonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vertex with coordinates affine in the cone parameters (u = 2 pi x, v = 2 pi y).
struct AffinePoint {
  MultiPoly u;
  MultiPoly v;
};

/// Moment polygon of the toric del Pezzo fan. Edge i runs from vertex i to
/// vertex i+1 (cyclically) along directions[i] with lattice length lengths[i].
struct ParamPolygon {
  std::vector<AffinePoint> vertices;
  std::vector<std::array<int, 2>> directions;
  std::vector<MultiPoly> lengths;
  std::vector<Rational> sample_point;

  const Variables& parameters() const { return lengths.front().variables(); }
  std::string to_string() const;
};

/// Boundary order of the fan: bottom L13, right chop E1, hypotenuse L12,
/// top E2, left L23, origin chop E3.
inline constexpr std::array<std::array<int, 2>, 6> kFanDirections{
    {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

/// `areas` in the order (a_E3, a_L13, a_E1, a_L12, a_E2, a_L23), all of degree
/// at most 1 over one parameter list. The sample point must make every area
/// nonnegative and the enclosed area positive; it may be empty for constants.
ParamPolygon build_polygon(const std::array<MultiPoly, 6>& areas, std::span<const Rational> sample_point);

/// Integral of u^a v^b over the polygon (Lebesgue measure in u, v).
MultiPoly integrate_monomial(const ParamPolygon& poly, unsigned a, unsigned b);

/// Integral of u^a v^b over the boundary against the lattice length measure.
MultiPoly boundary_integral(const ParamPolygon& poly, unsigned a, unsigned b);

struct SecondMoments {
  MultiPoly area;
  MultiPoly int_u, int_v, int_uu, int_vv, int_uv;
  RatFunc u0, v0;  // barycenter
  RatFunc Iuu, Ivv, Iuv;
};

SecondMoments central_second_moments(const ParamPolygon& poly);

}  // namespace kcert
