#include "liftcount/interpolation.hpp"

namespace liftcount {

std::vector<Rational> polynomial_coefficients(const PolynomialEvaluator& evaluator,
                                              std::size_t degree_bound) {
  const std::size_t d = degree_bound;
  std::vector<Rational> diffs(d + 1);
  for (std::size_t i = 0; i <= d; ++i) diffs[i] = evaluator(Rational{static_cast<int>(i)});

  // diffs[i] becomes the divided difference f[0..i]; nodes are 0..d, so the
  // denominator of level k is exactly k.
  for (std::size_t level = 1; level <= d; ++level)
    for (std::size_t i = d; i >= level; --i)
      diffs[i] = (diffs[i] - diffs[i - 1]) / Rational{static_cast<int>(level)};

  // Expand p(z) = sum_i diffs[i] * prod_{j<i} (z - j).
  std::vector<Rational> coeffs(d + 1, Rational{0});
  std::vector<Rational> basis(d + 1, Rational{0});
  basis[0] = 1;
  std::size_t basis_degree = 0;
  for (std::size_t i = 0; i <= d; ++i) {
    for (std::size_t j = 0; j <= basis_degree; ++j) coeffs[j] += diffs[i] * basis[j];
    if (i == d) break;
    Rational node{static_cast<int>(i)};
    for (std::size_t j = basis_degree + 1; j > 0; --j)
      basis[j] = basis[j - 1] - node * basis[j];
    basis[0] = -node * basis[0];
    ++basis_degree;
  }
  return coeffs;
}

Rational extract_coefficient(const PolynomialEvaluator& evaluator,
                             std::size_t degree_bound, std::size_t target_degree) {
  if (target_degree > degree_bound) return Rational{0};
  return polynomial_coefficients(evaluator, degree_bound)[target_degree];
}

}  // namespace liftcount
