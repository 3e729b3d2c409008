#pragma once

#include <cstdint>
#include <vector>

#include "liftcount/numbers.hpp"

namespace liftcount {

Integer factorial(std::uint64_t n);

// C(n, k); zero when k > n.
Integer binomial(std::uint64_t n, std::uint64_t k);

// n! / (parts_0! ... parts_{L-1}!). Throws std::invalid_argument unless the
// parts sum to n.
Integer multinomial(std::uint64_t n, const std::vector<std::uint64_t>& parts);

}  // namespace liftcount
