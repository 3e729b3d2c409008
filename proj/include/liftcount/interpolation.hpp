#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "liftcount/numbers.hpp"

namespace liftcount {

using PolynomialEvaluator = std::function<Rational(const Rational&)>;

// Recovers the monomial coefficients c_0..c_d of a polynomial of degree at
// most `degree_bound` from degree_bound + 1 exact evaluations at z = 0, 1,
// ..., degree_bound (Newton's divided differences, expanded to the monomial
// basis). Exact: no conditioning concerns arise with rational arithmetic.
std::vector<Rational> polynomial_coefficients(const PolynomialEvaluator& evaluator,
                                              std::size_t degree_bound);

// Coefficient of z^target_degree. Zero when target_degree > degree_bound.
Rational extract_coefficient(const PolynomialEvaluator& evaluator,
                             std::size_t degree_bound, std::size_t target_degree);

}  // namespace liftcount
