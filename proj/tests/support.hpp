#pragma once

#include <doctest.h>

#include <initializer_list>
#include <vector>

#include "kcert/rational.hpp"

namespace kcert::test {

inline Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline std::vector<Rational> pt(std::initializer_list<Rational> xs) { return std::vector<Rational>(xs); }

}  // namespace kcert::test

namespace doctest {
template <>
struct StringMaker<kcert::Rational> {
  static String convert(const kcert::Rational& r) { return r.get_str().c_str(); }
};
}  // namespace doctest
