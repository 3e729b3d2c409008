#include "liftcount/analyze.hpp"

#include <algorithm>
#include <set>

namespace liftcount {

namespace {

bool collect_cq_atoms(const Formula& f, std::vector<Formula>& atoms) {
  switch (f->kind) {
    case FormulaKind::Exists:
      return collect_cq_atoms(f->left, atoms);
    case FormulaKind::And:
      return collect_cq_atoms(f->left, atoms) && collect_cq_atoms(f->right, atoms);
    case FormulaKind::Atom:
      atoms.push_back(f);
      return true;
    default:
      return false;
  }
}

bool collect_clause_atoms(const Formula& f, std::vector<Formula>& atoms) {
  switch (f->kind) {
    case FormulaKind::Forall:
      return collect_clause_atoms(f->left, atoms);
    case FormulaKind::Or:
      return collect_clause_atoms(f->left, atoms) && collect_clause_atoms(f->right, atoms);
    case FormulaKind::Atom:
      atoms.push_back(f);
      return true;
    default:
      return false;
  }
}

struct Qs4Literal {
  bool positive;
  std::string a, b;
};

bool collect_qs4_literals(const Formula& f, std::string& relation,
                          std::vector<Qs4Literal>& lits) {
  if (f->kind == FormulaKind::Or)
    return collect_qs4_literals(f->left, relation, lits) &&
           collect_qs4_literals(f->right, relation, lits);
  bool positive = true;
  Formula g = f;
  if (g->kind == FormulaKind::Not) {
    positive = false;
    g = g->left;
  }
  if (g->kind != FormulaKind::Atom || g->args.size() != 2) return false;
  if (relation.empty()) relation = g->relation;
  if (g->relation != relation) return false;
  lits.push_back({positive, g->args[0], g->args[1]});
  return true;
}

}  // namespace

bool matches_qs4(const Formula& f) {
  // universal closure over exactly four distinct variables
  std::vector<std::string> prefix;
  Formula cur = f;
  while (cur->kind == FormulaKind::Forall) {
    prefix.push_back(cur->var);
    cur = cur->left;
  }
  std::set<std::string> distinct(prefix.begin(), prefix.end());
  if (prefix.size() != 4 || distinct.size() != 4) return false;

  std::string relation;
  std::vector<Qs4Literal> lits;
  if (!collect_qs4_literals(cur, relation, lits) || lits.size() != 4) return false;

  // try every role assignment (x1, x2, y1, y2) over the prefix variables
  std::vector<std::string> vars(distinct.begin(), distinct.end());
  std::sort(vars.begin(), vars.end());
  do {
    const std::string &x1 = vars[0], &x2 = vars[1], &y1 = vars[2], &y2 = vars[3];
    auto has = [&](bool pos, const std::string& a, const std::string& b) {
      for (const auto& l : lits)
        if (l.positive == pos && l.a == a && l.b == b) return true;
      return false;
    };
    if (has(true, x1, y1) && has(false, x2, y1) && has(true, x2, y2) && has(false, x1, y2))
      return true;
  } while (std::next_permutation(vars.begin(), vars.end()));
  return false;
}

FormulaClass analyze(const Formula& f) {
  FormulaClass out;
  out.distinct_variables = static_cast<unsigned>(all_variables(f).size());
  out.fo2 = out.distinct_variables <= 2;
  out.sentence = is_sentence(f);
  out.uses_equality = uses_equality(f);

  std::vector<Formula> atoms;
  if (out.sentence && collect_cq_atoms(f, atoms) && !atoms.empty()) {
    out.cq = true;
    std::set<std::string> names;
    bool distinct = true;
    for (const auto& a : atoms)
      if (!names.insert(a->relation).second) distinct = false;
    out.cq_without_self_joins = distinct;
  }

  atoms.clear();
  if (out.sentence && collect_clause_atoms(f, atoms) && !atoms.empty())
    out.positive_clause = true;

  out.qs4 = out.sentence && matches_qs4(f);
  return out;
}

}  // namespace liftcount
