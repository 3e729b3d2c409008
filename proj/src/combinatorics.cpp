#include "liftcount/combinatorics.hpp"

#include <numeric>
#include <stdexcept>

namespace liftcount {

Integer factorial(std::uint64_t n) {
  Integer r{1};
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return Integer{0};
  if (k > n - k) k = n - k;
  Integer r{1};
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step
  }
  return r;
}

Integer multinomial(std::uint64_t n, const std::vector<std::uint64_t>& parts) {
  std::uint64_t sum = std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
  if (sum != n)
    throw std::invalid_argument("multinomial: parts must sum to n");
  Integer r{1};
  std::uint64_t used = 0;
  for (std::uint64_t p : parts) {
    used += p;
    r *= binomial(used, p);
  }
  return r;
}

}  // namespace liftcount
