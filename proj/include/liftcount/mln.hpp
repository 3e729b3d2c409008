#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liftcount/formula.hpp"
#include "liftcount/numbers.hpp"
#include "liftcount/transforms.hpp"
#include "liftcount/vocabulary.hpp"
#include "liftcount/wmc.hpp"

namespace liftcount {

struct MlnConstraint {
  bool hard = false;
  Rational weight;  // meaningful for soft constraints only
  Formula body;     // free variables allowed, implicitly universally scoped
};

struct MlnModel {
  std::vector<MlnConstraint> constraints;
  Vocabulary vocab;  // relations of the constraint bodies, weights (1,1)
};

// One constraint per line: "<weight> :: <formula>", weight a Rational string
// or "inf"; "#" starts a comment.
MlnModel parse_mln(std::string_view text);

struct MlnReduction {
  Formula hard_sentence;  // Gamma: conjunction of all hard constraints
  Vocabulary vocab;       // original relations plus one R_i per soft constraint
  std::vector<IntroducedSymbol> introduced;
};

// Every soft constraint (w, phi(x)) becomes the hard sentence
// forall x (R(x) | phi(x)) with w_R = 1/(w-1). Weight-1 soft constraints are
// rejected: the factor they contribute is 1 in every world, so the caller
// should drop them instead of reducing them.
MlnReduction mln_reduce(const MlnModel& model);

// Reference semantics: enumerates all structures, weights each world by the
// product over satisfied soft groundings, zeroes worlds violating a hard
// constraint, and normalizes. Throws InconsistentMlnError when no world has
// nonzero weight.
Rational mln_direct(const MlnModel& model, const Formula& query, unsigned n,
                    const WmcOptions& options = {});

// Pr(query) = WFOMC(query & Gamma) / WFOMC(Gamma) over the reduced weighted
// vocabulary, both sides computed by `engine`.
Rational mln_query_via_reduction(const MlnModel& model, const Formula& query, unsigned n,
                                 const WfomcEngine& engine);

}  // namespace liftcount
