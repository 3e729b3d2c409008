#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liftcount/formula.hpp"
#include "liftcount/numbers.hpp"

namespace liftcount {

struct QueryVariable {
  std::string name;
  std::int64_t domain;  // per-variable domain size, >= 0
};

struct QueryEdge {
  std::string relation;
  std::vector<std::size_t> vars;  // indices into the variable list
  Rational p;                     // tuple probability; any rational
};

// Hypergraph of a conjunctive query without self-joins: variables are nodes,
// atoms are edges. No relation repeats, no variable repeats inside one atom,
// every variable occurs in at least one edge.
class QueryHypergraph {
 public:
  QueryHypergraph(std::vector<QueryVariable> variables, std::vector<QueryEdge> edges);

  // Builds from an existentially quantified conjunction of positive atoms.
  // Domain sizes default to `default_domain` unless overridden; probabilities
  // are per relation name.
  static QueryHypergraph from_formula(const Formula& cq, std::int64_t default_domain,
                                      const std::map<std::string, std::int64_t>& domains,
                                      const std::map<std::string, Rational>& probabilities);

  const std::vector<QueryVariable>& variables() const { return variables_; }
  const std::vector<QueryEdge>& edges() const { return edges_; }

  std::string describe() const;

 private:
  std::vector<QueryVariable> variables_;
  std::vector<QueryEdge> edges_;
};

enum class CqRule {
  EmptyEdge,            // (c)
  IdenticalEdges,       // (d)
  EdgeEquivalentNodes,  // (e)
  IsolatedNode,         // (a)
  SingletonEdge,        // (b)
  Separator,
};

struct CqStep {
  CqRule rule;
  std::string detail;
};

struct GammaResult {
  bool gamma_acyclic;
  std::vector<CqStep> trace;  // rule applications reaching the empty graph
  std::string stalled;        // the irreducible residue when not acyclic
};

// Decision procedure with rules (a)-(e) only; the separator technique is
// deliberately not part of gamma-acyclicity.
GammaResult gamma_reduce(const QueryHypergraph& query);

struct CqOptions {
  bool randomized_order = false;  // shuffle rule order per step (confluence tests)
  std::uint64_t seed = 0;
  bool allow_separator = true;    // used only when rules (a)-(e) stall
};

// Exact Pr(exists x1 in [n_1] ... the conjunction holds) under the
// independent-tuple distribution. Throws ScopeError when irreducible.
Rational cq_probability(const QueryHypergraph& query, const CqOptions& options = {});

// Separator-variable product: requires `var` to occur in every edge, returns
// Pr(Q[a/var])^(n_var) where Q[a/var] drops the variable from every atom.
// The per-element groups touch disjoint tuples, so this is the probability
// of the universal closure over `var` of the residual conjunction. The
// existential reading used by cq_probability's automatic fallback is the
// complement form 1 - (1 - Pr(Q[a/var]))^(n_var); the two coincide at
// n_var = 1.
Rational separator_rule(const QueryHypergraph& query, const std::string& var);

// Probability of a conjunction of positive equality-free clauses (universally
// quantified disjunctions of atoms) by inclusion-exclusion over clause
// subsets, merging each disjunction into one clause, and evaluating each
// merged clause through its dual CQ with complemented probabilities.
Rational clause_conjunction_probability(const std::vector<Formula>& clauses, std::int64_t n,
                                        const std::map<std::string, Rational>& probabilities,
                                        const CqOptions& options = {});

}  // namespace liftcount
