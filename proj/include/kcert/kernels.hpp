#pragma once

#include <span>
#include <vector>

#include "kcert/multipoly.hpp"

// Polynomial kernels. Each has a serial reference and an OpenMP variant;
// tests require them to agree exactly and bench_kernels times them.
namespace kcert::kernels {

/// p = (sum coeffs[i] * monomials[i]) / denominator with integer coeffs.
struct IntegerForm {
  std::vector<Monomial> monomials;
  std::vector<Integer> coeffs;
  Integer denominator{1};
};

IntegerForm to_integer_form(const MultiPoly& p);

/// Term-by-term product accumulated directly in rationals.
MultiPoly multiply_serial(const MultiPoly& a, const MultiPoly& b);

/// Integer-form product; outer loop split across OpenMP threads with
/// per-thread accumulators merged at the end.
MultiPoly multiply_parallel(const MultiPoly& a, const MultiPoly& b);

/// Operand size product above which MultiPoly::operator* uses the parallel kernel.
inline constexpr std::size_t kParallelMultiplyThreshold = 2048;

std::vector<Rational> evaluate_batch_serial(const MultiPoly& p,
                                            std::span<const std::vector<Rational>> points);
std::vector<Rational> evaluate_batch_parallel(const MultiPoly& p,
                                              std::span<const std::vector<Rational>> points);

int max_threads();

}  // namespace kcert::kernels
