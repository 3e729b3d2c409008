#pragma once

#include <vector>

#include "liftcount/formula.hpp"
#include "liftcount/numbers.hpp"

namespace liftcount {

// The four-variable clause
//   forall x1,x2,y1,y2. S(x1,y1) | !S(x2,y1) | S(x2,y2) | !S(x1,y2)
Formula qs4_formula();

// Every model satisfies exactly one of the two witness properties:
Formula qs4_pa();  // exists x. forall y.  S(x,y)
Formula qs4_pb();  // exists y. forall x. !S(x,y)

// f(n1,n2) counts models of the restricted clause that satisfy Pa, g those
// satisfying Pb; both tables are filled bottom-up.
struct Qs4Tables {
  std::vector<std::vector<Rational>> f, g;  // (n1+1) x (n2+1)
};

Qs4Tables qs4_tables(unsigned n, const Rational& w, const Rational& wbar);

// WFOMC(Q_S4, n, w, wbar): f(n,n) + g(n,n) for n >= 1, and 1 at n = 0.
Rational wfomc_qs4(unsigned n, const Rational& w, const Rational& wbar);

}  // namespace liftcount
