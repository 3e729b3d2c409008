#include "liftcount/normal.hpp"

#include <functional>
#include <memory>

#include "liftcount/errors.hpp"

namespace liftcount {

namespace {

Formula nnf_rec(const Formula& f, bool positive) {
  switch (f->kind) {
    case FormulaKind::Atom:
    case FormulaKind::Equal:
      return positive ? f : f_not(f);
    case FormulaKind::True:
      return positive ? f_true() : f_false();
    case FormulaKind::False:
      return positive ? f_false() : f_true();
    case FormulaKind::Not:
      return nnf_rec(f->left, !positive);
    case FormulaKind::And: {
      Formula l = nnf_rec(f->left, positive);
      Formula r = nnf_rec(f->right, positive);
      return positive ? f_and(l, r) : f_or(l, r);
    }
    case FormulaKind::Or: {
      Formula l = nnf_rec(f->left, positive);
      Formula r = nnf_rec(f->right, positive);
      return positive ? f_or(l, r) : f_and(l, r);
    }
    case FormulaKind::Implies: {
      Formula l = nnf_rec(f->left, !positive);
      Formula r = nnf_rec(f->right, positive);
      return positive ? f_or(l, r) : f_and(l, r);
    }
    case FormulaKind::Iff: {
      // (a&b)|(!a&!b); negated (a&!b)|(!a&b)
      Formula pp = f_and(nnf_rec(f->left, true), nnf_rec(f->right, positive));
      Formula nn = f_and(nnf_rec(f->left, false), nnf_rec(f->right, !positive));
      return f_or(pp, nn);
    }
    case FormulaKind::Forall: {
      Formula body = nnf_rec(f->left, positive);
      return positive ? f_forall(f->var, body) : f_exists(f->var, body);
    }
    case FormulaKind::Exists: {
      Formula body = nnf_rec(f->left, positive);
      return positive ? f_exists(f->var, body) : f_forall(f->var, body);
    }
  }
  return f;
}

}  // namespace

Formula nnf(const Formula& f) { return nnf_rec(f, true); }

namespace {

struct PrenexBuilder {
  std::vector<QuantifierStep> prefix;
  unsigned counter = 0;

  std::string fresh() { return "v" + std::to_string(++counter); }

  // `f` is in NNF; renames each quantified variable to a fresh name and pulls
  // the quantifier out.
  Formula pull(const Formula& f) {
    switch (f->kind) {
      case FormulaKind::Forall:
      case FormulaKind::Exists: {
        std::string name = fresh();
        prefix.push_back({f->kind == FormulaKind::Forall, name});
        return pull(substitute_variable(f->left, f->var, name));
      }
      case FormulaKind::And:
      case FormulaKind::Or: {
        Formula l = pull(f->left);
        Formula r = pull(f->right);
        return f->kind == FormulaKind::And ? f_and(l, r) : f_or(l, r);
      }
      default:
        return f;  // NNF leaves: atoms, equalities, negated leaves, constants
    }
  }
};

}  // namespace

PrenexForm prenex(const Formula& sentence) {
  if (!is_sentence(sentence)) throw ValidationError("prenex: formula has free variables");
  PrenexBuilder builder;
  Formula matrix = builder.pull(nnf(sentence));
  return {std::move(builder.prefix), std::move(matrix)};
}

Formula prenex_to_formula(const PrenexForm& p) {
  Formula f = p.matrix;
  for (auto it = p.prefix.rbegin(); it != p.prefix.rend(); ++it)
    f = it->universal ? f_forall(it->var, f) : f_exists(it->var, f);
  return f;
}

bool is_forall_star(const Formula& f) {
  Formula cur = f;
  while (cur->kind == FormulaKind::Forall) cur = cur->left;
  // no quantifier may remain below
  std::function<bool(const Formula&)> qf = [&](const Formula& g) -> bool {
    switch (g->kind) {
      case FormulaKind::Forall:
      case FormulaKind::Exists:
        return false;
      case FormulaKind::Not:
        return qf(g->left);
      case FormulaKind::And:
      case FormulaKind::Or:
      case FormulaKind::Implies:
      case FormulaKind::Iff:
        return qf(g->left) && qf(g->right);
      default:
        return true;
    }
  };
  return qf(cur);
}

Formula simplify(const Formula& f) {
  switch (f->kind) {
    case FormulaKind::Atom:
    case FormulaKind::Equal:
    case FormulaKind::True:
    case FormulaKind::False:
      return f;
    case FormulaKind::Not: {
      Formula body = simplify(f->left);
      if (body->kind == FormulaKind::True) return f_false();
      if (body->kind == FormulaKind::False) return f_true();
      if (body->kind == FormulaKind::Not) return body->left;
      return body == f->left ? f : f_not(body);
    }
    case FormulaKind::And: {
      Formula l = simplify(f->left);
      Formula r = simplify(f->right);
      if (l->kind == FormulaKind::False || r->kind == FormulaKind::False) return f_false();
      if (l->kind == FormulaKind::True) return r;
      if (r->kind == FormulaKind::True) return l;
      return l == f->left && r == f->right ? f : f_and(l, r);
    }
    case FormulaKind::Or: {
      Formula l = simplify(f->left);
      Formula r = simplify(f->right);
      if (l->kind == FormulaKind::True || r->kind == FormulaKind::True) return f_true();
      if (l->kind == FormulaKind::False) return r;
      if (r->kind == FormulaKind::False) return l;
      return l == f->left && r == f->right ? f : f_or(l, r);
    }
    case FormulaKind::Implies: {
      Formula l = simplify(f->left);
      Formula r = simplify(f->right);
      if (l->kind == FormulaKind::False || r->kind == FormulaKind::True) return f_true();
      if (l->kind == FormulaKind::True) return r;
      if (r->kind == FormulaKind::False) return simplify(f_not(l));
      return l == f->left && r == f->right ? f : f_implies(l, r);
    }
    case FormulaKind::Iff: {
      Formula l = simplify(f->left);
      Formula r = simplify(f->right);
      if (l->kind == FormulaKind::True) return r;
      if (r->kind == FormulaKind::True) return l;
      if (l->kind == FormulaKind::False) return simplify(f_not(r));
      if (r->kind == FormulaKind::False) return simplify(f_not(l));
      return l == f->left && r == f->right ? f : f_iff(l, r);
    }
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      Formula body = simplify(f->left);
      // keep vacuous quantifiers: over the empty domain they matter
      if (body == f->left) return f;
      return f->kind == FormulaKind::Forall ? f_forall(f->var, body)
                                            : f_exists(f->var, body);
    }
  }
  return f;
}

Formula assign_nullary(const Formula& f, const std::string& relation, bool value) {
  switch (f->kind) {
    case FormulaKind::Atom:
      if (f->relation == relation && f->args.empty()) return value ? f_true() : f_false();
      return f;
    case FormulaKind::Equal:
    case FormulaKind::True:
    case FormulaKind::False:
      return f;
    case FormulaKind::Not:
      return f_not(assign_nullary(f->left, relation, value));
    case FormulaKind::Forall:
      return f_forall(f->var, assign_nullary(f->left, relation, value));
    case FormulaKind::Exists:
      return f_exists(f->var, assign_nullary(f->left, relation, value));
    default: {
      Formula l = assign_nullary(f->left, relation, value);
      Formula r = assign_nullary(f->right, relation, value);
      auto n = std::make_shared<FormulaNode>();
      n->kind = f->kind;
      n->left = l;
      n->right = r;
      return n;
    }
  }
}

}  // namespace liftcount
