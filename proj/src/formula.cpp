#include "liftcount/formula.hpp"

#include <utility>

#include "liftcount/errors.hpp"

namespace liftcount {

namespace {

Formula make(FormulaKind kind) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = kind;
  return n;
}

}  // namespace

Formula f_atom(std::string relation, std::vector<std::string> args) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = FormulaKind::Atom;
  n->relation = std::move(relation);
  n->args = std::move(args);
  return n;
}

Formula f_eq(std::string a, std::string b) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = FormulaKind::Equal;
  n->args = {std::move(a), std::move(b)};
  return n;
}

Formula f_true() {
  static const Formula t = make(FormulaKind::True);
  return t;
}

Formula f_false() {
  static const Formula f = make(FormulaKind::False);
  return f;
}

Formula f_not(Formula f) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = FormulaKind::Not;
  n->left = std::move(f);
  return n;
}

namespace {

Formula binary(FormulaKind kind, Formula a, Formula b) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = kind;
  n->left = std::move(a);
  n->right = std::move(b);
  return n;
}

Formula quantifier(FormulaKind kind, std::string var, Formula body) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = kind;
  n->var = std::move(var);
  n->left = std::move(body);
  return n;
}

}  // namespace

Formula f_and(Formula a, Formula b) { return binary(FormulaKind::And, std::move(a), std::move(b)); }
Formula f_or(Formula a, Formula b) { return binary(FormulaKind::Or, std::move(a), std::move(b)); }
Formula f_implies(Formula a, Formula b) { return binary(FormulaKind::Implies, std::move(a), std::move(b)); }
Formula f_iff(Formula a, Formula b) { return binary(FormulaKind::Iff, std::move(a), std::move(b)); }
Formula f_forall(std::string var, Formula body) {
  return quantifier(FormulaKind::Forall, std::move(var), std::move(body));
}
Formula f_exists(std::string var, Formula body) {
  return quantifier(FormulaKind::Exists, std::move(var), std::move(body));
}

Formula f_and_all(const std::vector<Formula>& parts) {
  if (parts.empty()) return f_true();
  Formula acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) acc = f_and(acc, parts[i]);
  return acc;
}

Formula f_or_all(const std::vector<Formula>& parts) {
  if (parts.empty()) return f_false();
  Formula acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) acc = f_or(acc, parts[i]);
  return acc;
}

bool structurally_equal(const Formula& a, const Formula& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FormulaKind::Atom:
      return a->relation == b->relation && a->args == b->args;
    case FormulaKind::Equal:
      return a->args == b->args;
    case FormulaKind::True:
    case FormulaKind::False:
      return true;
    case FormulaKind::Not:
      return structurally_equal(a->left, b->left);
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      return structurally_equal(a->left, b->left) && structurally_equal(a->right, b->right);
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return a->var == b->var && structurally_equal(a->left, b->left);
  }
  return false;
}

namespace {

void collect_free(const Formula& f, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  switch (f->kind) {
    case FormulaKind::Atom:
      for (const auto& a : f->args)
        if (!bound.count(a)) out.insert(a);
      return;
    case FormulaKind::Equal:
      for (const auto& a : f->args)
        if (!bound.count(a)) out.insert(a);
      return;
    case FormulaKind::True:
    case FormulaKind::False:
      return;
    case FormulaKind::Not:
      collect_free(f->left, bound, out);
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      collect_free(f->left, bound, out);
      collect_free(f->right, bound, out);
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      bool fresh = bound.insert(f->var).second;
      collect_free(f->left, bound, out);
      if (fresh) bound.erase(f->var);
      return;
    }
  }
}

void collect_all(const Formula& f, std::set<std::string>& out) {
  switch (f->kind) {
    case FormulaKind::Atom:
    case FormulaKind::Equal:
      out.insert(f->args.begin(), f->args.end());
      return;
    case FormulaKind::True:
    case FormulaKind::False:
      return;
    case FormulaKind::Not:
      collect_all(f->left, out);
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      out.insert(f->var);
      collect_all(f->left, out);
      return;
    default:
      collect_all(f->left, out);
      collect_all(f->right, out);
      return;
  }
}

void collect_relations(const Formula& f, std::map<std::string, unsigned>& out) {
  switch (f->kind) {
    case FormulaKind::Atom: {
      auto [it, fresh] = out.emplace(f->relation, f->args.size());
      if (!fresh && it->second != f->args.size())
        throw ValidationError("relation '" + f->relation + "' used with arities " +
                              std::to_string(it->second) + " and " +
                              std::to_string(f->args.size()));
      return;
    }
    case FormulaKind::Equal:
    case FormulaKind::True:
    case FormulaKind::False:
      return;
    case FormulaKind::Not:
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      collect_relations(f->left, out);
      return;
    default:
      collect_relations(f->left, out);
      collect_relations(f->right, out);
      return;
  }
}

}  // namespace

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

std::set<std::string> all_variables(const Formula& f) {
  std::set<std::string> out;
  collect_all(f, out);
  return out;
}

bool is_sentence(const Formula& f) { return free_variables(f).empty(); }

bool uses_equality(const Formula& f) {
  switch (f->kind) {
    case FormulaKind::Equal:
      return true;
    case FormulaKind::Atom:
    case FormulaKind::True:
    case FormulaKind::False:
      return false;
    case FormulaKind::Not:
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return uses_equality(f->left);
    default:
      return uses_equality(f->left) || uses_equality(f->right);
  }
}

std::map<std::string, unsigned> relations_used(const Formula& f) {
  std::map<std::string, unsigned> out;
  collect_relations(f, out);
  return out;
}

Formula substitute_variable(const Formula& f, const std::string& var,
                            const std::string& replacement) {
  switch (f->kind) {
    case FormulaKind::Atom: {
      std::vector<std::string> args = f->args;
      bool changed = false;
      for (auto& a : args)
        if (a == var) {
          a = replacement;
          changed = true;
        }
      return changed ? f_atom(f->relation, std::move(args)) : f;
    }
    case FormulaKind::Equal: {
      std::string a = f->args[0] == var ? replacement : f->args[0];
      std::string b = f->args[1] == var ? replacement : f->args[1];
      if (a == f->args[0] && b == f->args[1]) return f;
      return f_eq(a, b);
    }
    case FormulaKind::True:
    case FormulaKind::False:
      return f;
    case FormulaKind::Not: {
      Formula body = substitute_variable(f->left, var, replacement);
      return body == f->left ? f : f_not(body);
    }
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff: {
      Formula l = substitute_variable(f->left, var, replacement);
      Formula r = substitute_variable(f->right, var, replacement);
      if (l == f->left && r == f->right) return f;
      auto n = std::make_shared<FormulaNode>();
      n->kind = f->kind;
      n->left = l;
      n->right = r;
      return n;
    }
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      if (f->var == var) return f;  // shadowed
      Formula body = substitute_variable(f->left, var, replacement);
      if (body == f->left) return f;
      auto n = std::make_shared<FormulaNode>();
      n->kind = f->kind;
      n->var = f->var;
      n->left = body;
      return n;
    }
  }
  return f;
}

namespace {

// Precedence levels for rendering; higher binds tighter.
int precedence(FormulaKind kind) {
  switch (kind) {
    case FormulaKind::Iff: return 1;
    case FormulaKind::Implies: return 2;
    case FormulaKind::Or: return 3;
    case FormulaKind::And: return 4;
    case FormulaKind::Not: return 5;
    default: return 6;
  }
}

void render_into(const Formula& f, std::string& out, int parent_prec) {
  int prec = precedence(f->kind);
  switch (f->kind) {
    case FormulaKind::Atom:
      out += f->relation;
      if (!f->args.empty()) {
        out += '(';
        for (std::size_t i = 0; i < f->args.size(); ++i) {
          if (i) out += ',';
          out += f->args[i];
        }
        out += ')';
      }
      return;
    case FormulaKind::Equal:
      out += f->args[0] + " = " + f->args[1];
      return;
    case FormulaKind::True:
      out += "true";
      return;
    case FormulaKind::False:
      out += "false";
      return;
    case FormulaKind::Not:
      if (f->left->kind == FormulaKind::Equal) {
        out += f->left->args[0] + " != " + f->left->args[1];
        return;
      }
      out += '!';
      render_into(f->left, out, prec);
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff: {
      bool parens = prec < parent_prec;
      if (parens) out += '(';
      const char* op = f->kind == FormulaKind::And
                           ? " & "
                           : f->kind == FormulaKind::Or
                                 ? " | "
                                 : f->kind == FormulaKind::Implies ? " -> " : " <-> ";
      // Left-associative chains render without parens on the left.
      render_into(f->left, out, f->kind == FormulaKind::Implies ? prec + 1 : prec);
      out += op;
      render_into(f->right, out, f->kind == FormulaKind::Implies ? prec : prec + 1);
      if (parens) out += ')';
      return;
    }
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      bool parens = parent_prec > 0;
      if (parens) out += '(';
      out += f->kind == FormulaKind::Forall ? "forall " : "exists ";
      out += f->var;
      out += ". ";
      render_into(f->left, out, 0);
      if (parens) out += ')';
      return;
    }
  }
}

}  // namespace

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out, 0);
  return out;
}

}  // namespace liftcount
