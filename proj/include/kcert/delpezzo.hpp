#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kcert/multipoly.hpp"

namespace kcert {

class CohomologyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// h H - e1 E1 - e2 E2 - e3 E3 on the k-point blow-up (k = 1, 2, 3; unused e_i
/// are zero). Numeric classes use an empty variable list.
struct CohClass {
  int k = 3;
  MultiPoly h, e1, e2, e3;

  const MultiPoly& e(int i) const;
  const Variables& variables() const { return h.variables(); }
  std::string to_string() const;
};

CohClass make_class(int k, const MultiPoly& h, const MultiPoly& e1, const MultiPoly& e2, const MultiPoly& e3);
CohClass make_class(int k, const Rational& h, const Rational& e1, const Rational& e2, const Rational& e3);
CohClass anticanonical(int k, const Variables& vars = {});

/// h h' - sum e_i e_i'.
MultiPoly pair(const CohClass& x, const CohClass& y);
CohClass operator+(const CohClass& x, const CohClass& y);
CohClass operator*(const Rational& c, const CohClass& x);
bool operator==(const CohClass& x, const CohClass& y);

enum AreaSlot { kE3 = 0, kL13 = 1, kE1 = 2, kL12 = 3, kE2 = 4, kL23 = 5 };

/// Curve areas (a_E3, a_L13, a_E1, a_L12, a_E2, a_L23).
struct AreaVector {
  std::array<MultiPoly, 6> a;
  const Variables& variables() const { return a[0].variables(); }
  bool operator==(const AreaVector& o) const = default;
  std::string to_string() const;
};

AreaVector areas_of(const CohClass& x);
/// Throws CohomologyError unless the two closure relations hold (and a_E3 = 0 when k = 2).
CohClass class_of(const AreaVector& areas, int k = 3);

/// The Cremona involution; k must be 3.
CohClass cremona(const CohClass& x);
AreaVector cremona(const AreaVector& x);

/// (alpha, beta, gamma, delta): areas (alpha, beta+delta, gamma, alpha+delta, beta, gamma+delta).
struct K3Coords {
  MultiPoly alpha, beta, gamma, delta;
};
AreaVector areas_of(const K3Coords& c);
K3Coords coords_of(const AreaVector& a);
K3Coords cremona(const K3Coords& c);

struct Membership {
  bool in_V = false;  // delta = a_L12 - a_E3 vanishes
  bool in_W = false;  // a_E1 = a_E2 = a_E3
};
Membership subspace_membership(const CohClass& x);

/// perm[i-1] is the image of index i; the coefficient of E_i moves to E_perm(i).
CohClass permute_exceptional(const CohClass& x, std::span<const int> perm);
AreaVector permute_exceptional(const AreaVector& x, std::span<const int> perm, int k = 3);

enum class ChartId { K2, K3_U };

struct ConeChart {
  ChartId id;
  std::string name;
  Variables params;
  CohClass omega;
  AreaVector areas;
  std::vector<Rational> sample_point;
};

/// K2: Omega = (1+b+g)H - g E1 - b E2 over (beta, gamma).
/// K3_U: Omega = (1+a+b+g)H - g E1 - b E2 - a E3 over (alpha, beta, gamma), delta = 1.
const ConeChart& cone_chart(ChartId id);
/// Four-parameter k = 3 family over (alpha, beta, gamma, delta).
const ConeChart& k3_full_chart();

}  // namespace kcert
