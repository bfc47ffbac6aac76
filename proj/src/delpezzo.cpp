#include "kcert/delpezzo.hpp"

#include <algorithm>

namespace kcert {
namespace {

void require_k3(const CohClass& x, const char* op) {
  if (x.k != 3) throw CohomologyError(std::string(op) + " is defined only for k = 3");
}

void check_k(int k) {
  if (k < 1 || k > 3) throw CohomologyError("k must be 1, 2 or 3");
}

}  // namespace

const MultiPoly& CohClass::e(int i) const {
  switch (i) {
    case 1: return e1;
    case 2: return e2;
    case 3: return e3;
    default: throw CohomologyError("exceptional index out of range");
  }
}

std::string CohClass::to_string() const {
  std::string s = "(" + h.to_string() + ")H";
  for (int i = 1; i <= k; ++i) s += " - (" + e(i).to_string() + ")E" + std::to_string(i);
  return s;
}

CohClass make_class(int k, const MultiPoly& h, const MultiPoly& e1, const MultiPoly& e2, const MultiPoly& e3) {
  check_k(k);
  h.require_same_variables(e1, "class");
  h.require_same_variables(e2, "class");
  h.require_same_variables(e3, "class");
  if ((k < 3 && !e3.is_zero()) || (k < 2 && !e2.is_zero()))
    throw CohomologyError("coefficient of an absent exceptional divisor must vanish");
  return CohClass{k, h, e1, e2, e3};
}

CohClass make_class(int k, const Rational& h, const Rational& e1, const Rational& e2, const Rational& e3) {
  const Variables none;
  return make_class(k, MultiPoly(none, h), MultiPoly(none, e1), MultiPoly(none, e2), MultiPoly(none, e3));
}

CohClass anticanonical(int k, const Variables& vars) {
  check_k(k);
  return make_class(k, MultiPoly(vars, 3), MultiPoly(vars, 1), MultiPoly(vars, k >= 2 ? 1 : 0),
                    MultiPoly(vars, k >= 3 ? 1 : 0));
}

MultiPoly pair(const CohClass& x, const CohClass& y) {
  if (x.k != y.k) throw CohomologyError("pairing classes on different blow-ups");
  return x.h * y.h - x.e1 * y.e1 - x.e2 * y.e2 - x.e3 * y.e3;
}

CohClass operator+(const CohClass& x, const CohClass& y) {
  if (x.k != y.k) throw CohomologyError("adding classes on different blow-ups");
  return CohClass{x.k, x.h + y.h, x.e1 + y.e1, x.e2 + y.e2, x.e3 + y.e3};
}

CohClass operator*(const Rational& c, const CohClass& x) {
  return CohClass{x.k, x.h * c, x.e1 * c, x.e2 * c, x.e3 * c};
}

bool operator==(const CohClass& x, const CohClass& y) {
  return x.k == y.k && x.h == y.h && x.e1 == y.e1 && x.e2 == y.e2 && x.e3 == y.e3;
}

std::string AreaVector::to_string() const {
  static constexpr const char* kNames[6] = {"E3", "L13", "E1", "L12", "E2", "L23"};
  std::string s;
  for (std::size_t i = 0; i < 6; ++i) {
    if (i > 0) s += ", ";
    s += std::string(kNames[i]) + "=" + a[i].to_string();
  }
  return s;
}

AreaVector areas_of(const CohClass& x) {
  AreaVector v;
  v.a[kE3] = x.e3;
  v.a[kL13] = x.h - x.e1 - x.e3;
  v.a[kE1] = x.e1;
  v.a[kL12] = x.h - x.e1 - x.e2;
  v.a[kE2] = x.e2;
  v.a[kL23] = x.h - x.e2 - x.e3;
  return v;
}

CohClass class_of(const AreaVector& v, int k) {
  const MultiPoly h = v.a[kL12] + v.a[kE1] + v.a[kE2];
  if (!(v.a[kL13] + v.a[kE3] == v.a[kL12] + v.a[kE2]) || !(v.a[kL23] + v.a[kE3] == v.a[kL12] + v.a[kE1]))
    throw CohomologyError("areas violate the closure relations: " + v.to_string());
  return make_class(k, h, v.a[kE1], v.a[kE2], v.a[kE3]);
}

CohClass cremona(const CohClass& x) {
  require_k3(x, "cremona");
  return CohClass{3, x.h * Rational(2) - x.e1 - x.e2 - x.e3, x.h - x.e2 - x.e3, x.h - x.e1 - x.e3,
                  x.h - x.e1 - x.e2};
}

AreaVector cremona(const AreaVector& x) {
  AreaVector y = x;
  std::swap(y.a[kE1], y.a[kL23]);
  std::swap(y.a[kE2], y.a[kL13]);
  std::swap(y.a[kE3], y.a[kL12]);
  return y;
}

AreaVector areas_of(const K3Coords& c) {
  return AreaVector{{c.alpha, c.beta + c.delta, c.gamma, c.alpha + c.delta, c.beta, c.gamma + c.delta}};
}

K3Coords coords_of(const AreaVector& a) {
  return K3Coords{a.a[kE3], a.a[kE2], a.a[kE1], a.a[kL12] - a.a[kE3]};
}

K3Coords cremona(const K3Coords& c) {
  return K3Coords{c.alpha + c.delta, c.beta + c.delta, c.gamma + c.delta, -c.delta};
}

Membership subspace_membership(const CohClass& x) {
  require_k3(x, "subspace membership");
  const AreaVector a = areas_of(x);
  Membership m;
  m.in_V = (a.a[kL12] - a.a[kE3]).is_zero();
  m.in_W = a.a[kE1] == a.a[kE2] && a.a[kE2] == a.a[kE3];
  return m;
}

CohClass permute_exceptional(const CohClass& x, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != x.k) throw CohomologyError("permutation size differs from k");
  std::vector<int> sorted(perm.begin(), perm.end());
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < x.k; ++i) {
    if (sorted[static_cast<std::size_t>(i)] != i + 1) throw CohomologyError("not a permutation of 1..k");
  }
  std::array<MultiPoly, 3> e{x.e1, x.e2, x.e3};
  std::array<MultiPoly, 3> out = e;
  for (int i = 0; i < x.k; ++i) out[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)] - 1)] = e[static_cast<std::size_t>(i)];
  return CohClass{x.k, x.h, out[0], out[1], out[2]};
}

AreaVector permute_exceptional(const AreaVector& x, std::span<const int> perm, int k) {
  return areas_of(permute_exceptional(class_of(x, k), perm));
}

namespace {

ConeChart build_chart(ChartId id) {
  ConeChart c;
  c.id = id;
  if (id == ChartId::K2) {
    c.name = "k2";
    c.params = {"beta", "gamma"};
    const MultiPoly b = MultiPoly::variable(c.params, 0);
    const MultiPoly g = MultiPoly::variable(c.params, 1);
    c.omega = make_class(2, b + g + Rational(1), g, b, MultiPoly(c.params));
    c.sample_point = {Rational(1), Rational(1)};
  } else {
    c.name = "k3";
    c.params = {"alpha", "beta", "gamma"};
    const MultiPoly a = MultiPoly::variable(c.params, 0);
    const MultiPoly b = MultiPoly::variable(c.params, 1);
    const MultiPoly g = MultiPoly::variable(c.params, 2);
    c.omega = make_class(3, a + b + g + Rational(1), g, b, a);
    c.sample_point = {Rational(1), Rational(1), Rational(1)};
  }
  c.areas = areas_of(c.omega);
  return c;
}

}  // namespace

const ConeChart& cone_chart(ChartId id) {
  static const ConeChart k2 = build_chart(ChartId::K2);
  static const ConeChart k3 = build_chart(ChartId::K3_U);
  return id == ChartId::K2 ? k2 : k3;
}

const ConeChart& k3_full_chart() {
  static const ConeChart chart = [] {
    ConeChart c;
    c.id = ChartId::K3_U;
    c.name = "k3_full";
    c.params = {"alpha", "beta", "gamma", "delta"};
    K3Coords k{MultiPoly::variable(c.params, 0), MultiPoly::variable(c.params, 1),
               MultiPoly::variable(c.params, 2), MultiPoly::variable(c.params, 3)};
    c.areas = areas_of(k);
    c.omega = class_of(c.areas, 3);
    c.sample_point = {Rational(1), Rational(1), Rational(1), Rational(1)};
    return c;
  }();
  return chart;
}

}  // namespace kcert
