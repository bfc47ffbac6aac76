#pragma once

#include <optional>
#include <vector>

#include "kcert/univariate.hpp"

namespace kcert {

struct RootInterval {
  Rational lo, hi;  // open interval containing exactly one root
};

struct SturmQuery {
  Rational lo;
  std::optional<Rational> hi;  // nullopt: +infinity
  int roots = 0;
};

struct SturmData {
  UniPoly polynomial;
  std::vector<UniPoly> chain;
  std::vector<SturmQuery> queries;
};

/// p, p', then negated remainders until zero. Throws on the zero polynomial.
std::vector<UniPoly> sturm_chain(const UniPoly& p);

int sign_variations(const std::vector<UniPoly>& chain, const Rational& x);
/// direction +1 for +infinity, -1 for -infinity.
int sign_variations_at_infinity(const std::vector<UniPoly>& chain, int direction);

/// Distinct roots in (lo, hi]; p(lo) must be nonzero.
int count_roots(const std::vector<UniPoly>& chain, const Rational& lo, const Rational& hi);
/// Distinct roots in (lo, +infinity); p(lo) must be nonzero.
int count_roots_above(const std::vector<UniPoly>& chain, const Rational& lo);

/// Isolating intervals of width <= target_width for the roots in (lo, hi),
/// sorted left to right. Endpoints that are roots are pushed outward first.
std::vector<RootInterval> sturm_isolate(const UniPoly& p, Rational lo, Rational hi, const Rational& target_width);

}  // namespace kcert
