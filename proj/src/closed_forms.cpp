#include "liftcount/closed_forms.hpp"

#include "liftcount/combinatorics.hpp"
#include "liftcount/errors.hpp"

namespace liftcount {

Rational closed_form(std::string_view name, unsigned n, const Vocabulary& weights) {
  if (name == "exists_S") {
    const Rational& w = weights.weight("S");
    const Rational& wbar = weights.cweight("S");
    return rat_pow(w + wbar, n) - rat_pow(wbar, n);
  }
  if (name == "forall_exists_R") {
    const Rational& w = weights.weight("R");
    const Rational& wbar = weights.cweight("R");
    return rat_pow(rat_pow(w + wbar, n) - rat_pow(wbar, n), n);
  }
  if (name == "table1_fomc") {
    Rational total{0};
    std::int64_t nn = static_cast<std::int64_t>(n) * n;
    for (unsigned k = 0; k <= n; ++k)
      for (unsigned m = 0; m <= n; ++m)
        total += Rational{binomial(n, k) * binomial(n, m)} *
                 rat_pow(Rational{2}, nn - static_cast<std::int64_t>(k) * m);
    return total;
  }
  if (name == "table1_wfomc") {
    const Rational& wr = weights.weight("R");
    const Rational& wbr = weights.cweight("R");
    const Rational& ws = weights.weight("S");
    const Rational& wbs = weights.cweight("S");
    const Rational& wt = weights.weight("T");
    const Rational& wbt = weights.cweight("T");
    std::int64_t nn = static_cast<std::int64_t>(n) * n;
    Rational total{0};
    for (unsigned k = 0; k <= n; ++k) {
      for (unsigned m = 0; m <= n; ++m) {
        std::int64_t km = static_cast<std::int64_t>(k) * m;
        Rational wkm = rat_pow(wr, n - k) * rat_pow(wbr, k) * rat_pow(ws, km) *
                       rat_pow(ws + wbs, nn - km) * rat_pow(wt, n - m) * rat_pow(wbt, m);
        total += Rational{binomial(n, k) * binomial(n, m)} * wkm;
      }
    }
    return total;
  }
  throw ValidationError("unknown closed form '" + std::string(name) + "'");
}

}  // namespace liftcount
