#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace liftcount {

// Every quantity in the engine is an exact integer or an exact rational.
// Rationals are kept canonical at all times: denominator > 0 and
// gcd(|num|, den) = 1.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer int_pow(const Integer& base, std::uint64_t exp);

// Negative exponents invert; raising zero to a negative power throws
// std::domain_error.
Rational rat_pow(const Rational& base, std::int64_t exp);

// Textual form used bit-exactly in all file formats and CLI output:
// "p/q" with an optional sign on p, or a bare integer "p".
Rational parse_rational(std::string_view text);
std::string render_rational(const Rational& value);

// Decimal approximation with `digits` places, rounded half away from zero.
std::string decimal_string(const Rational& value, unsigned digits);

inline Integer numerator_of(const Rational& q) {
  return boost::multiprecision::numerator(q);
}
inline Integer denominator_of(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

}  // namespace liftcount
