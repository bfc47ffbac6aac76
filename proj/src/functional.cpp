#include "kcert/functional.hpp"

#include "kcert/calculus.hpp"
#include "kcert/parser.hpp"

namespace kcert {

PiScalar PiRatFunc::at(std::span<const Rational> point) const {
  return PiScalar(evaluate(value, point), pi_power);
}

std::string PiRatFunc::to_string() const {
  if (pi_power == 0) return value.to_string();
  return "(" + value.to_string() + ")*pi^" + std::to_string(pi_power);
}

namespace {

RatFunc parsed(const char* num, const char* den, const Variables& vars) {
  return RatFunc(parse_expression(num, vars), parse_expression(den, vars));
}

const Variables& k2_vars() { return cone_chart(ChartId::K2).params; }
const Variables& k3_vars() { return cone_chart(ChartId::K3_U).params; }

// Integer coefficients, combined content 1, positive leading denominator coefficient.
void normalize_pair(UniPoly& num, UniPoly& den) {
  Integer l = 1;
  for (const UniPoly* p : {&num, &den}) {
    for (const auto& c : p->coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Integer g = 0;
  for (const UniPoly* p : {&num, &den}) {
    for (const auto& c : p->coeffs()) {
      Rational scaled = c * l;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_num_mpz_t());
    }
  }
  Rational s(l, g);
  s.canonicalize();
  if (den.leading() < 0) s = -s;
  num = num * s;
  den = den * s;
}

}  // namespace

FutakiPair futaki_closed_form(ChartId chart) {
  if (chart == ChartId::K2) {
    const Variables& v = k2_vars();
    return FutakiPair{
        parsed("2 ((beta - 2 gamma)(1 + 3 gamma + 3 gamma^2) + 3 gamma (gamma - beta)(2 + beta + 2 gamma))",
               "3 (2 beta gamma + 2 beta + 2 gamma + 1)", v),
        parsed("2 ((gamma - 2 beta)(1 + 3 beta + 3 beta^2) + 3 beta (beta - gamma)(2 + gamma + 2 beta))",
               "3 (2 beta gamma + 2 beta + 2 gamma + 1)", v)};
  }
  const Variables& v = k3_vars();
  const char* den = "3 (2 alpha beta + 2 alpha gamma + 2 beta gamma + 2 alpha + 2 beta + 2 gamma + 1)";
  return FutakiPair{
      parsed("2 ((alpha + beta - 2 gamma)(1 + 3 gamma + 3 gamma^2)"
             " + 3 (gamma - alpha)(gamma - beta)(2 + alpha + beta + 2 gamma))",
             den, v),
      parsed("2 ((alpha + gamma - 2 beta)(1 + 3 beta + 3 beta^2)"
             " + 3 (beta - alpha)(beta - gamma)(2 + alpha + gamma + 2 beta))",
             den, v)};
}

MomentForms moment_closed_form_k2() {
  const Variables& v = k2_vars();
  const char* den = "144 (2 beta gamma + 2 beta + 2 gamma + 1)";
  return MomentForms{
      PiRatFunc{parsed("1 + 6 (1 + beta)(beta + beta^2 + beta^3 + gamma (1 + 4 beta + 4 beta^2 + 2 beta^3)"
                       " + gamma^2 (1 + beta)^3)",
                       den, v),
                -2},
      PiRatFunc{parsed("1 + 6 (1 + gamma)(gamma + gamma^2 + gamma^3 + beta (1 + 4 gamma + 4 gamma^2 + 2 gamma^3)"
                       " + beta^2 (1 + gamma)^3)",
                       den, v),
                -2},
      PiRatFunc{parsed("-(1 + 6 (1 + beta)(1 + gamma)(beta + gamma + 3 beta gamma))",
                       "288 (2 beta gamma + 2 beta + 2 gamma + 1)", v),
                -2}};
}

FutakiPair futaki_boundary(const AreaVector& areas, std::span<const Rational> sample_point, int k) {
  const ParamPolygon poly = build_polygon(areas.a, sample_point);
  const MultiPoly V = integrate_monomial(poly, 0, 0);
  const CohClass omega = class_of(areas, k);
  const MultiPoly c1w = pair(anticanonical(k, areas.variables()), omega);
  const MultiPoly f1 = (V * boundary_integral(poly, 1, 0) - c1w * integrate_monomial(poly, 1, 0)) * Rational(2);
  const MultiPoly f2 = (V * boundary_integral(poly, 0, 1) - c1w * integrate_monomial(poly, 0, 1)) * Rational(2);
  return FutakiPair{RatFunc(f1, V), RatFunc(f2, V)};
}

PiRatFunc futaki_norm_sq(const RatFunc& F1, const RatFunc& F2, const PiRatFunc& A, const PiRatFunc& B,
                         const PiRatFunc& C) {
  if (A.pi_power != B.pi_power || A.pi_power != C.pi_power)
    throw PiPowerMismatch("moment matrix entries carry different powers of pi");
  const RatFunc det = A.value * B.value - C.value * C.value;
  if (det.is_zero()) throw DomainError("degenerate moment matrix");
  const RatFunc num = B.value * F1 * F1 - C.value * F1 * F2 * Rational(2) + A.value * F2 * F2;
  return PiRatFunc{num / det, -A.pi_power};
}

FunctionalBundle build_bundle(const AreaVector& areas, std::span<const Rational> sample_point, int k,
                              std::string name) {
  FunctionalBundle b;
  b.name = std::move(name);
  b.params = areas.variables();
  b.areas = areas;
  b.omega = class_of(areas, k);
  b.polygon = build_polygon(areas.a, sample_point);
  b.moments = central_second_moments(b.polygon);
  const SecondMoments& m = b.moments;
  b.V = m.area;
  b.omega_sq = pair(b.omega, b.omega);
  if (!(b.omega_sq == b.V * Rational(2)))
    throw std::logic_error("polygon area differs from half the self-intersection");
  b.c1_omega = pair(anticanonical(k, b.params), b.omega);

  const MultiPoly& V = b.V;
  const MultiPoly f1 = (V * boundary_integral(b.polygon, 1, 0) - b.c1_omega * m.int_u) * Rational(2);
  const MultiPoly f2 = (V * boundary_integral(b.polygon, 0, 1) - b.c1_omega * m.int_v) * Rational(2);
  b.futaki = FutakiPair{RatFunc(f1, V), RatFunc(f2, V)};

  // q = V * (central second moment in u, v); A = q / (4 V pi^2).
  const MultiPoly quu = V * m.int_uu - m.int_u * m.int_u;
  const MultiPoly qvv = V * m.int_vv - m.int_v * m.int_v;
  const MultiPoly quv = V * m.int_uv - m.int_u * m.int_v;
  b.A = PiRatFunc{RatFunc(quu, V * Rational(4)), -2};
  b.B = PiRatFunc{RatFunc(qvv, V * Rational(4)), -2};
  b.C = PiRatFunc{RatFunc(quv, V * Rational(4)), -2};

  // With F_i = f_i / V and I = q / V:
  //   ||F||^2 / 32 pi^2 = NF / (8 V det),  first term = 4 (c1.Omega)^2 det / (8 V det).
  const MultiPoly det = quu * qvv - quv * quv;
  if (det.is_zero()) throw DomainError("degenerate moment matrix");
  const MultiPoly NF = qvv * f1 * f1 - quv * f1 * f2 * Rational(2) + quu * f2 * f2;
  const MultiPoly den = V * det * Rational(8);
  const MultiPoly c1w_sq = b.c1_omega * b.c1_omega;
  b.first_term = RatFunc(c1w_sq, b.omega_sq);
  b.futaki_norm_sq_over_32pi2 = RatFunc(NF, den).cancel_factor(V);
  b.calA = RatFunc(c1w_sq * det * Rational(4) + NF, den).cancel_factor(V);
  return b;
}

FunctionalBundle build_bundle(const ConeChart& chart) {
  return build_bundle(chart.areas, chart.sample_point, chart.omega.k, chart.name);
}

RatFunc assemble_calA(const ConeChart& chart) { return build_bundle(chart).calA; }

Rational calA_value(const AreaVector& numeric_areas, int k) {
  if (!numeric_areas.variables().empty()) throw std::invalid_argument("calA_value expects numeric areas");
  const FunctionalBundle b = build_bundle(numeric_areas, {}, k);
  return evaluate(b.calA, std::span<const Rational>{});
}

PiRatFunc average_scalar_curvature(const FunctionalBundle& b) {
  return PiRatFunc{RatFunc(b.c1_omega * Rational(4), b.V), 1};
}

DiagonalRestriction restrict_diagonal(const RatFunc& calA_k2) {
  const Variables one{"beta"};
  const MultiPoly beta = MultiPoly::variable(one, 0);
  const std::vector<MultiPoly> images{beta, beta};
  DiagonalRestriction r;
  UniPoly n = UniPoly::from_multipoly(substitute(calA_k2.num(), images));
  UniPoly d = UniPoly::from_multipoly(substitute(calA_k2.den(), images));
  if (d.is_zero()) throw DomainError("diagonal restriction has zero denominator");
  const UniPoly g = UniPoly::gcd(n, d);
  if (!g.is_zero() && g.degree() > 0) {
    n = UniPoly::divmod(n, g).first;
    d = UniPoly::divmod(d, g).first;
  }
  normalize_pair(n, d);
  r.num = n;
  r.den = d;
  r.F = RatFunc(n.to_multipoly("beta"), d.to_multipoly("beta"));
  const UniPoly n1 = n.derivative();
  const UniPoly d1 = d.derivative();
  r.P_raw = n1 * d - n * d1;
  r.Q_raw = (n1.derivative() * d - n * d1.derivative()) * d - r.P_raw * d1 * Rational(2);
  r.P = r.P_raw * Rational(1 / r.constant);
  r.Q = r.Q_raw * Rational(1 / r.constant);
  return r;
}

Rational first_variation_along_c1(const CohClass& omega) {
  if (!omega.variables().empty()) throw std::invalid_argument("first variation expects a numeric class");
  const Membership m = subspace_membership(omega);
  if (!m.in_V && !m.in_W) throw CohomologyError("class lies in neither V nor W");
  const CohClass c1 = anticanonical(omega.k);
  const Rational w2 = pair(omega, omega).constant_value();
  if (w2 == 0) throw DomainError("class has zero square");
  const Rational c1w = pair(c1, omega).constant_value();
  const Rational c1c1 = pair(c1, c1).constant_value();
  return 2 * c1w / (w2 * w2) * (w2 * c1c1 - c1w * c1w);
}

}  // namespace kcert
