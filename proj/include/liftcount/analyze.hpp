#pragma once

#include "liftcount/formula.hpp"

namespace liftcount {

struct FormulaClass {
  unsigned distinct_variables = 0;
  bool fo2 = false;                 // at most 2 distinct logical variables
  bool sentence = false;
  bool uses_equality = false;
  bool cq = false;                  // existentially quantified conjunction of positive atoms
  bool cq_without_self_joins = false;
  bool positive_clause = false;     // universally quantified disjunction of positive atoms
  bool qs4 = false;                 // the four-variable S-clause, up to renaming
};

FormulaClass analyze(const Formula& f);

// The canonical four-variable clause over a binary symbol S, its domain-size
// restriction helpers live in qs4.hpp.
bool matches_qs4(const Formula& f);

}  // namespace liftcount
