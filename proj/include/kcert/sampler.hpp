#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kcert/delpezzo.hpp"

namespace kcert {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

/// Deterministic rational samples: numerator and denominator uniform in [1, 1000].
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

  Rational positive();
  /// Uniform sign, magnitude from positive().
  Rational signed_value();

  /// Point of the K2 chart (beta, gamma > 0).
  std::vector<Rational> k2_point();
  /// Point of the K3_U chart (alpha, beta, gamma > 0).
  std::vector<Rational> k3_point();
  /// Numeric k = 3 class with all six areas positive. Rotates through the
  /// domains delta > 0, delta < 0 and delta = 0.
  AreaVector k3_class();
  /// Numeric class in V (delta = 0) or W (alpha = beta = gamma), alternating.
  AreaVector k3_class_in_V_or_W();

 private:
  std::mt19937_64 rng_;
  unsigned rotation_ = 0;
};

AreaVector numeric_areas(const Rational& alpha, const Rational& beta, const Rational& gamma, const Rational& delta);
bool strictly_inside(const AreaVector& numeric);

}  // namespace kcert
