#include "liftcount/qs4.hpp"

#include "liftcount/combinatorics.hpp"

namespace liftcount {

Formula qs4_formula() {
  Formula clause = f_or(
      f_or(f_atom("S", {"x1", "y1"}), f_not(f_atom("S", {"x2", "y1"}))),
      f_or(f_atom("S", {"x2", "y2"}), f_not(f_atom("S", {"x1", "y2"}))));
  return f_forall("x1", f_forall("x2", f_forall("y1", f_forall("y2", clause))));
}

Formula qs4_pa() {
  return f_exists("x", f_forall("y", f_atom("S", {"x", "y"})));
}

Formula qs4_pb() {
  return f_exists("y", f_forall("x", f_not(f_atom("S", {"x", "y"}))));
}

Qs4Tables qs4_tables(unsigned n, const Rational& w, const Rational& wbar) {
  Qs4Tables tables;
  tables.f.assign(n + 1, std::vector<Rational>(n + 1, Rational{0}));
  tables.g.assign(n + 1, std::vector<Rational>(n + 1, Rational{0}));

  // bases: f(n1, 0) = 1, g(0, n2) = 1; the mirrored entries f(0, n2 >= 1) and
  // g(n1 >= 1, 0) are 0 (the witness property is unsatisfiable) and are never
  // read by the recurrences.
  for (unsigned n1 = 0; n1 <= n; ++n1) tables.f[n1][0] = 1;
  for (unsigned n2 = 0; n2 <= n; ++n2) tables.g[0][n2] = 1;

  for (unsigned n1 = 1; n1 <= n; ++n1) {
    for (unsigned n2 = 1; n2 <= n; ++n2) {
      Rational f_sum{0};
      for (unsigned k = 1; k <= n1; ++k)
        f_sum += Rational{binomial(n1, k)} *
                 rat_pow(w, static_cast<std::int64_t>(k) * n2) * tables.g[n1 - k][n2];
      tables.f[n1][n2] = f_sum;

      Rational g_sum{0};
      for (unsigned l = 1; l <= n2; ++l)
        g_sum += Rational{binomial(n2, l)} *
                 rat_pow(wbar, static_cast<std::int64_t>(n1) * l) * tables.f[n1][n2 - l];
      tables.g[n1][n2] = g_sum;
    }
  }
  return tables;
}

Rational wfomc_qs4(unsigned n, const Rational& w, const Rational& wbar) {
  // The f/g split needs a nonempty domain; the single empty structure
  // satisfies the universal clause.
  if (n == 0) return Rational{1};
  Qs4Tables tables = qs4_tables(n, w, wbar);
  return tables.f[n][n] + tables.g[n][n];
}

}  // namespace liftcount
