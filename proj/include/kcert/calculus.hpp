#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kcert/ratfunc.hpp"

namespace kcert {

MultiPoly partial_derivative(const MultiPoly& p, std::size_t var);
MultiPoly partial_derivative(const MultiPoly& p, const std::string& var);

/// Sum_i v_i * d/dx_i applied to p.
MultiPoly directional_derivative(const MultiPoly& p, std::span<const int> v);

/// Second derivative of N/D along v, assembled as
///   (N_vv D^2 - 2 N_v D_v D - N D_vv D + 2 N D_v^2) / D^3
/// with no cancellation: the returned denominator is exactly D^3.
RatFunc directional_second_derivative(const RatFunc& f, std::span<const int> v);

struct NonnegCheck {
  bool all_nonneg = true;
  // Most negative coefficient and its monomial, when all_nonneg is false.
  std::optional<std::pair<Rational, Monomial>> witness;
  Rational min_coefficient{0};
};

NonnegCheck coefficients_all_nonneg(const MultiPoly& p);

Rational evaluate(const MultiPoly& p, std::span<const Rational> point);
/// Throws DomainError if the denominator vanishes at the point.
Rational evaluate(const RatFunc& f, std::span<const Rational> point);

}  // namespace kcert
