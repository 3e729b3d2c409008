#pragma once

#include <vector>

#include "liftcount/formula.hpp"

namespace liftcount {

// Negation normal form: ->, <-> expanded, negation pushed onto atoms and
// equalities. Preserves truth on every structure.
Formula nnf(const Formula& f);

struct QuantifierStep {
  bool universal;
  std::string var;
};

struct PrenexForm {
  std::vector<QuantifierStep> prefix;
  Formula matrix;  // quantifier-free
};

// Prenex normal form with freshly named prefix variables v1, v2, ....
// Sound for sentences (zero quantifiers left in the matrix).
PrenexForm prenex(const Formula& sentence);

Formula prenex_to_formula(const PrenexForm& p);

// True when the sentence is a chain of foralls over a quantifier-free matrix.
bool is_forall_star(const Formula& f);

// Constant folding only; no clause-level reasoning.
Formula simplify(const Formula& f);

// Replaces atoms of the given nullary relation by a truth constant.
Formula assign_nullary(const Formula& f, const std::string& relation, bool value);

}  // namespace liftcount
