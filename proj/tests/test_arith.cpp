#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liftcount/combinatorics.hpp"
#include "liftcount/interpolation.hpp"
#include "liftcount/numbers.hpp"

using namespace liftcount;

TEST_CASE("binomial base cases") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(52, 5) == 2598960);
}

TEST_CASE("binomial symmetry") {
  for (std::uint64_t n = 0; n <= 20; ++n)
    for (std::uint64_t k = 0; k <= n; ++k) CHECK(binomial(n, k) == binomial(n, n - k));
}

TEST_CASE("multinomial") {
  CHECK(multinomial(4, {2, 1, 1}) == 12);
  CHECK(multinomial(5, {5}) == 1);
  CHECK(multinomial(3, {1, 1, 1}) == 6);
  CHECK(multinomial(0, {}) == 1);
  CHECK_THROWS_AS(multinomial(4, {2, 1}), std::invalid_argument);
}

TEST_CASE("compositions of n into L parts sum to L^n") {
  const unsigned L = 3, n = 5;
  Integer total{0};
  std::vector<std::uint64_t> parts(L, 0);
  // enumerate all compositions of n into L nonnegative parts
  std::function<void(unsigned, unsigned)> rec = [&](unsigned idx, unsigned rem) {
    if (idx + 1 == L) {
      parts[idx] = rem;
      total += multinomial(n, parts);
      return;
    }
    for (unsigned k = 0; k <= rem; ++k) {
      parts[idx] = k;
      rec(idx + 1, rem - k);
    }
  };
  rec(0, n);
  CHECK(total == int_pow(Integer{L}, n));
}

TEST_CASE("rational parse/render round-trip") {
  for (const char* text : {"0", "1", "-1", "7/3", "-22/7", "1000000000000000000000/7"}) {
    Rational q = parse_rational(text);
    CHECK(render_rational(q) == text);
    CHECK(parse_rational(render_rational(q)) == q);
  }
  // non-canonical inputs normalize
  CHECK(render_rational(parse_rational("4/6")) == "2/3");
  CHECK(render_rational(parse_rational("-4/6")) == "-2/3");
  CHECK(render_rational(parse_rational("+3")) == "3");
  CHECK(render_rational(parse_rational("8/4")) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("canonical form invariants hold after arithmetic") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 40);
  for (int i = 0; i < 500; ++i) {
    Rational a{num(rng), den(rng)};
    Rational b{num(rng), den(rng)};
    for (const Rational& q : std::vector<Rational>{Rational(a + b), Rational(a - b),
                                                   Rational(a * b)}) {
      CHECK(denominator_of(q) > 0);
      CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(numerator_of(q)),
                                       denominator_of(q)) == 1);
    }
  }
}

TEST_CASE("rational powers") {
  CHECK(rat_pow(Rational{2, 3}, 3) == Rational{8, 27});
  CHECK(rat_pow(Rational{2, 3}, -2) == Rational{9, 4});
  CHECK(rat_pow(Rational{-2}, 3) == Rational{-8});
  CHECK(rat_pow(Rational{5}, 0) == 1);
  CHECK(rat_pow(Rational{0}, 0) == 1);
  CHECK_THROWS_AS(rat_pow(Rational{0}, -1), std::domain_error);
}

TEST_CASE("decimal rendering") {
  CHECK(decimal_string(Rational{1, 2}, 3) == "0.500");
  CHECK(decimal_string(Rational{-1, 3}, 4) == "-0.3333");
  CHECK(decimal_string(Rational{2, 3}, 2) == "0.67");
  CHECK(decimal_string(Rational{5}, 0) == "5");
  CHECK(decimal_string(Rational{1, 200}, 2) == "0.01");  // half rounds away from zero
}

TEST_CASE("extract_coefficient reads off explicit polynomials") {
  PolynomialEvaluator cubic = [](const Rational& z) {
    return z * z * z + 2 * z * z;
  };
  CHECK(extract_coefficient(cubic, 3, 2) == 2);
  CHECK(extract_coefficient(cubic, 3, 3) == 1);
  CHECK(extract_coefficient(cubic, 3, 0) == 0);

  PolynomialEvaluator zero = [](const Rational&) { return Rational{0}; };
  CHECK(extract_coefficient(zero, 5, 3) == 0);
}

TEST_CASE("extract_coefficient recovers random rational polynomials exactly") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  for (int trial = 0; trial < 10; ++trial) {
    std::uniform_int_distribution<std::size_t> deg(0, 30);
    std::size_t degree = deg(rng);
    std::vector<Rational> coeffs(degree + 1);
    for (auto& c : coeffs) c = Rational{num(rng), den(rng)};
    PolynomialEvaluator eval = [&](const Rational& z) {
      Rational acc{0};
      for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
      return acc;
    };
    std::vector<Rational> recovered = polynomial_coefficients(eval, degree);
    REQUIRE(recovered.size() == coeffs.size());
    for (std::size_t i = 0; i <= degree; ++i) CHECK(recovered[i] == coeffs[i]);
    CHECK(extract_coefficient(eval, degree + 4, degree) == coeffs[degree]);
  }
}
