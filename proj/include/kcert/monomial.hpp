#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>

namespace kcert {

inline constexpr std::size_t kMaxVariables = 6;

/// Dense exponent vector with one slot per declared variable.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exponents);

  std::size_t size() const { return size_; }
  unsigned operator[](std::size_t i) const { return exponents_[i]; }
  void set(std::size_t i, unsigned e);

  unsigned degree() const;
  bool is_one() const { return degree() == 0; }
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVariables> exponents_{};
  std::uint8_t size_ = 0;
};

/// Graded reverse lexicographic order, descending: true when a comes before b.
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace kcert
