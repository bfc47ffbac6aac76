#include "kcert/kernels.hpp"

#include <unordered_map>

#include "kcert/calculus.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kcert::kernels {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

IntegerForm to_integer_form(const MultiPoly& p) {
  IntegerForm f;
  f.denominator = coefficient_denominator_lcm(p);
  f.monomials.reserve(p.size());
  f.coeffs.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    f.monomials.push_back(m);
    Integer scaled = f.denominator / c.get_den();
    f.coeffs.push_back(scaled * c.get_num());
  }
  return f;
}

MultiPoly multiply_serial(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_variables(b, "multiplication");
  MultiPoly r(a.variables());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

MultiPoly multiply_parallel(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_variables(b, "multiplication");
  const IntegerForm fa = to_integer_form(a);
  const IntegerForm fb = to_integer_form(b);
  using Accumulator = std::unordered_map<Monomial, Integer, MonomialHash>;
  const int nthreads = max_threads();
  std::vector<Accumulator> partial(static_cast<std::size_t>(nthreads));
  const auto na = static_cast<long>(fa.monomials.size());
  const std::size_t nb = fb.monomials.size();

#pragma omp parallel num_threads(nthreads)
  {
#ifdef _OPENMP
    Accumulator& acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
#else
    Accumulator& acc = partial[0];
#endif
    acc.reserve(fa.monomials.size() + nb);
#pragma omp for schedule(dynamic, 4)
    for (long i = 0; i < na; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      for (std::size_t j = 0; j < nb; ++j) {
        Integer& slot = acc[fa.monomials[ui] * fb.monomials[j]];
        mpz_addmul(slot.get_mpz_t(), fa.coeffs[ui].get_mpz_t(), fb.coeffs[j].get_mpz_t());
      }
    }
  }

  Accumulator& merged = partial[0];
  for (std::size_t t = 1; t < partial.size(); ++t) {
    for (auto& [m, c] : partial[t]) merged[m] += c;
  }
  const Integer den = fa.denominator * fb.denominator;
  MultiPoly r(a.variables());
  for (const auto& [m, c] : merged) {
    if (c == 0) continue;
    Rational q(c, den);
    q.canonicalize();
    r.add_term(m, q);
  }
  return r;
}

std::vector<Rational> evaluate_batch_serial(const MultiPoly& p,
                                            std::span<const std::vector<Rational>> points) {
  std::vector<Rational> out;
  out.reserve(points.size());
  for (const auto& pt : points) out.push_back(evaluate(p, pt));
  return out;
}

std::vector<Rational> evaluate_batch_parallel(const MultiPoly& p,
                                              std::span<const std::vector<Rational>> points) {
  std::vector<Rational> out(points.size());
  const auto n = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    out[ui] = evaluate(p, points[ui]);
  }
  return out;
}

}  // namespace kcert::kernels
