#pragma once

#include <span>
#include <string>
#include <utility>

#include "kcert/delpezzo.hpp"
#include "kcert/polytope.hpp"
#include "kcert/rational.hpp"
#include "kcert/ratfunc.hpp"
#include "kcert/univariate.hpp"

namespace kcert {

/// value * pi^pi_power.
struct PiRatFunc {
  RatFunc value;
  int pi_power = 0;

  PiScalar at(std::span<const Rational> point) const;
  std::string to_string() const;
};

struct FutakiPair {
  RatFunc F1, F2;
};

struct FunctionalBundle {
  std::string name;
  Variables params;
  AreaVector areas;
  CohClass omega;
  ParamPolygon polygon;
  SecondMoments moments;
  MultiPoly V;          // polygon area, equal to Omega^2 / 2
  MultiPoly c1_omega;   // c1 . Omega
  MultiPoly omega_sq;   // Omega . Omega
  FutakiPair futaki;    // boundary route
  PiRatFunc A, B, C;    // second central moments of x = u / 2 pi, y = v / 2 pi
  RatFunc first_term;   // (c1 . Omega)^2 / Omega^2
  RatFunc futaki_norm_sq_over_32pi2;
  RatFunc calA;
};

/// Closed-form Futaki components for the two charts.
FutakiPair futaki_closed_form(ChartId chart);

/// F_i = 2 [ boundary integral of w_i - (c1.Omega)/V * area integral of w_i ], w = (u, v).
FutakiPair futaki_boundary(const AreaVector& areas, std::span<const Rational> sample_point, int k = 3);

/// Closed-form A, B, C for the K2 chart.
struct MomentForms {
  PiRatFunc A, B, C;
};
MomentForms moment_closed_form_k2();

/// ||F||^2 = (B F1^2 - 2 C F1 F2 + A F2^2) / (AB - C^2). Throws DomainError when
/// AB - C^2 vanishes identically.
PiRatFunc futaki_norm_sq(const RatFunc& F1, const RatFunc& F2, const PiRatFunc& A, const PiRatFunc& B,
                         const PiRatFunc& C);

/// Every ingredient of the functional for an arbitrary area vector (symbolic
/// or numeric). `k` selects the blow-up for the intersection form.
FunctionalBundle build_bundle(const AreaVector& areas, std::span<const Rational> sample_point, int k,
                              std::string name = {});
FunctionalBundle build_bundle(const ConeChart& chart);

RatFunc assemble_calA(const ConeChart& chart);

/// Value of the functional for numeric areas, through the full polygon pipeline.
Rational calA_value(const AreaVector& numeric_areas, int k = 3);

/// Average scalar curvature s0 = 4 pi (c1.Omega) / V.
PiRatFunc average_scalar_curvature(const FunctionalBundle& b);

struct DiagonalRestriction {
  RatFunc F;            // calA(beta, beta), reduced by the univariate gcd
  UniPoly num, den;     // F = num / den, integer coefficients, den primitive
  UniPoly P_raw;        // num' den - num den'
  UniPoly Q_raw;        // numerator of F'' over den^3
  Rational constant{12};
  UniPoly P, Q;         // raw / constant
};

DiagonalRestriction restrict_diagonal(const RatFunc& calA_k2);

/// d/dt at t = 0 of (c1.(Omega + t c1))^2 / (Omega + t c1)^2; Omega must lie in
/// V or W and have nonzero square.
Rational first_variation_along_c1(const CohClass& omega);

}  // namespace kcert
