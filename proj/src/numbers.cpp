#include "liftcount/numbers.hpp"

#include <cctype>
#include <stdexcept>

namespace liftcount {

Integer int_pow(const Integer& base, std::uint64_t exp) {
  Integer result{1};
  Integer b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp > 0) b *= b;
  }
  return result;
}

Rational rat_pow(const Rational& base, std::int64_t exp) {
  if (exp >= 0) {
    Rational r{int_pow(numerator_of(base), static_cast<std::uint64_t>(exp)),
               int_pow(denominator_of(base), static_cast<std::uint64_t>(exp))};
    return r;
  }
  if (base == 0) throw std::domain_error("rat_pow: zero base with negative exponent");
  std::uint64_t e = static_cast<std::uint64_t>(-(exp + 1)) + 1;
  return Rational{int_pow(denominator_of(base), e), int_pow(numerator_of(base), e)};
}

namespace {

bool valid_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer integer_from(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t");
  std::size_t last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos)
    throw std::invalid_argument("parse_rational: empty input");
  std::string_view s = text.substr(first, last - first + 1);

  std::size_t slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_integer_token(s))
      throw std::invalid_argument("parse_rational: bad integer '" + std::string(s) + "'");
    return Rational{integer_from(s)};
  }
  std::string_view num = s.substr(0, slash);
  std::string_view den = s.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den))
    throw std::invalid_argument("parse_rational: bad rational '" + std::string(s) + "'");
  Integer d = integer_from(den);
  if (d == 0) throw std::invalid_argument("parse_rational: zero denominator");
  return Rational{integer_from(num), d};
}

std::string render_rational(const Rational& value) {
  if (denominator_of(value) == 1) return numerator_of(value).str();
  return numerator_of(value).str() + "/" + denominator_of(value).str();
}

std::string decimal_string(const Rational& value, unsigned digits) {
  Integer num = numerator_of(value);
  Integer den = denominator_of(value);
  bool negative = num < 0;
  if (negative) num = -num;

  Integer scale = int_pow(Integer{10}, digits);
  Integer scaled = num * scale;
  Integer q = scaled / den;
  Integer r = scaled % den;
  if (2 * r >= den) ++q;  // round half away from zero

  Integer ip = q / scale;
  Integer fp = q % scale;
  std::string out = negative && q != 0 ? "-" : "";
  out += ip.str();
  if (digits > 0) {
    std::string frac = fp.str();
    out += "." + std::string(digits - frac.size(), '0') + frac;
  }
  return out;
}

}  // namespace liftcount
