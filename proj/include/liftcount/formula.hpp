#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace liftcount {

enum class FormulaKind {
  Atom,     // relation(args...)
  Equal,    // var = var
  True,
  False,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Forall,
  Exists,
};

class FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

class FormulaNode {
 public:
  FormulaKind kind;
  std::string relation;           // Atom
  std::vector<std::string> args;  // Atom arguments; Equal uses args[0], args[1]
  std::string var;                // Forall / Exists
  Formula left;                   // unary child / first binary child / body
  Formula right;                  // second binary child
};

Formula f_atom(std::string relation, std::vector<std::string> args = {});
Formula f_eq(std::string a, std::string b);
Formula f_true();
Formula f_false();
Formula f_not(Formula f);
Formula f_and(Formula a, Formula b);
Formula f_or(Formula a, Formula b);
Formula f_implies(Formula a, Formula b);
Formula f_iff(Formula a, Formula b);
Formula f_forall(std::string var, Formula body);
Formula f_exists(std::string var, Formula body);

Formula f_and_all(const std::vector<Formula>& parts);  // true when empty
Formula f_or_all(const std::vector<Formula>& parts);   // false when empty

bool structurally_equal(const Formula& a, const Formula& b);

std::set<std::string> free_variables(const Formula& f);
std::set<std::string> all_variables(const Formula& f);  // distinct names, bound or free
bool is_sentence(const Formula& f);
bool uses_equality(const Formula& f);

// relation name -> arity as used by atoms of f. Throws ValidationError if a
// relation appears with two different arities.
std::map<std::string, unsigned> relations_used(const Formula& f);

// Replaces free occurrences of `var` by `replacement` (a variable name).
Formula substitute_variable(const Formula& f, const std::string& var,
                            const std::string& replacement);

std::string render(const Formula& f);

}  // namespace liftcount
