#pragma once

#include <functional>
#include <string>
#include <vector>

#include "liftcount/formula.hpp"
#include "liftcount/normal.hpp"
#include "liftcount/numbers.hpp"
#include "liftcount/vocabulary.hpp"

namespace liftcount {

struct IntroducedSymbol {
  std::string name;
  std::string role;
};

// base^(poly(n)) with poly given by coefficients over n^0, n^1, ....
// Negative values of poly(n) divide; a zero base with a negative exponent is
// rejected at evaluation time.
struct ScalePower {
  Rational base;
  std::vector<std::int64_t> poly;

  std::int64_t exponent_at(unsigned n) const;
};

struct TransformResult {
  Formula formula;
  Vocabulary vocab;  // extends the input vocabulary
  std::vector<IntroducedSymbol> introduced;

  // WFOMC(input, n) = multiplier_at(n) * WFOMC(formula, n, vocab).
  // Identity (empty) for the weight-preserving transforms.
  std::vector<ScalePower> multiplier;

  Rational multiplier_at(unsigned n) const;
};

// Weighted Skolemization: eliminates every existential quantifier, outside
// in, producing a prenex forall* sentence. Each elimination adds a fresh
// symbol A with weights (1, -1). Exact at every n.
TransformResult skolemize(const Formula& sentence, const Vocabulary& vocab);

// Core of the above on an explicit prenex form; fresh symbols are added to
// `vocab` and recorded in `introduced`. Used conjunct-wise by the FO2 engine.
PrenexForm skolemize_prenex_form(PrenexForm p, Vocabulary& vocab,
                                 std::vector<IntroducedSymbol>& introduced);

// Eliminates negations from a prenex forall* sentence. Each negated literal
// gains fresh symbols A, B with weights (1,1) and (1,-1) plus the guard
// clauses (psi|A) & (A|B) & (psi|B). Exact at every n.
TransformResult remove_negation(const Formula& sentence, const Vocabulary& vocab);

// Replaces x=y atoms by a fresh binary E and conjoins forall x. E(x,x),
// weights of E are a placeholder. The count of the original sentence is the
// z^n coefficient of n |-> WFOMC(formula, n) with w_E = z, degree bound n^2.
TransformResult remove_equality(const Formula& sentence, const Vocabulary& vocab);

using WfomcEngine =
    std::function<Rational(const Formula&, unsigned, const Vocabulary&)>;

// Runs the coefficient-extraction recipe on a remove_equality result using
// the supplied engine for the oracle calls. Degenerates to a single direct
// call when the input had no equality.
Rational equality_recipe(const TransformResult& removal, unsigned n,
                         const WfomcEngine& engine);

// Scott's reduction: one definitional symbol per distinct subformula, each
// with weights (1,1), plus the nullary root conjunct. Output is a conjunction
// of prenex sentences; model correspondence is one-to-one and weights match.
TransformResult scott_reduce(const Formula& sentence, const Vocabulary& vocab);

// Rewrites atoms of arity >= 3 (FO2 input) over fresh symbols of arity <= 2.
// Ground tuples not expressible with at most two distinct constants are
// unconstrained, so the result carries an explicit multiplier
// (w+wbar)^(count); with several two-variable patterns per relation the
// rewrite also uses equality guards. See the module notes in the README.
TransformResult reduce_arity(const Formula& sentence, const Vocabulary& vocab);

struct ShannonBranch {
  Formula formula;
  Rational multiplier;
};

struct ShannonExpansion {
  Vocabulary vocab;  // input vocabulary minus the expanded nullary symbols
  std::vector<ShannonBranch> branches;
};

// Branches on every nullary symbol occurring in the sentence:
// WFOMC(input, n, vocab) = sum over branches of multiplier * WFOMC(branch).
ShannonExpansion shannon_expand_nullary(const Formula& sentence, const Vocabulary& vocab);

}  // namespace liftcount
