#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "liftcount/formula.hpp"
#include "liftcount/vocabulary.hpp"

namespace liftcount {

// One ground tuple R_i(a_1..a_k), all a_j in [1..n].
struct GroundAtom {
  std::uint32_t rel = 0;
  std::vector<unsigned> args;

  bool operator==(const GroundAtom& o) const { return rel == o.rel && args == o.args; }
};

// Propositional circuit over ground-tuple variables. Negation lives only on
// literals; And/Or are n-ary with constants folded away at construction.
class GroundCircuit {
 public:
  enum class Kind : std::uint8_t { Const, Lit, And, Or };

  struct Node {
    Kind kind;
    bool value = false;             // Const: truth; Lit: sign (true = positive)
    std::uint32_t var = 0;          // Lit
    std::vector<std::uint32_t> children;
  };

  static constexpr std::uint32_t kTrue = 0;
  static constexpr std::uint32_t kFalse = 1;

  GroundCircuit();

  std::uint32_t mk_lit(std::uint32_t var, bool sign);
  std::uint32_t mk_and(std::vector<std::uint32_t> children);
  std::uint32_t mk_or(std::vector<std::uint32_t> children);
  std::uint32_t mk_const(bool value) const { return value ? kTrue : kFalse; }

  std::uint32_t intern_variable(const GroundAtom& atom);

  void set_root(std::uint32_t node) { root_ = node; }
  std::uint32_t root() const { return root_; }
  const Node& node(std::uint32_t id) const { return nodes_[id]; }
  std::size_t variable_count() const { return vars_.size(); }
  const std::vector<GroundAtom>& variables() const { return vars_; }

  // Evaluates the root under a full assignment (one byte per variable, 0/1).
  bool eval(const std::vector<std::int8_t>& assignment) const;

  std::string variable_name(std::uint32_t var, const Vocabulary& vocab) const;

 private:
  bool eval_node(std::uint32_t id, const std::vector<std::int8_t>& assignment) const;

  std::vector<Node> nodes_;
  std::uint32_t root_ = kTrue;
  std::vector<GroundAtom> vars_;
  std::unordered_map<std::string, std::uint32_t> var_index_;
};

// The lineage F_{Phi,n}: existentials expand to disjunctions over [1..n],
// universals to conjunctions, equalities between constants fold to truth
// values. Implication and biconditional are expanded; negation is pushed to
// the literals during construction.
GroundCircuit lineage(const Formula& sentence, unsigned n, const Vocabulary& vocab);

}  // namespace liftcount
