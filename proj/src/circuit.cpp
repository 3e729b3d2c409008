#include "liftcount/circuit.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "liftcount/errors.hpp"

namespace liftcount {

GroundCircuit::GroundCircuit() {
  nodes_.push_back({Kind::Const, true, 0, {}});   // kTrue
  nodes_.push_back({Kind::Const, false, 0, {}});  // kFalse
}

std::uint32_t GroundCircuit::mk_lit(std::uint32_t var, bool sign) {
  nodes_.push_back({Kind::Lit, sign, var, {}});
  return static_cast<std::uint32_t>(nodes_.size() - 1);
}

std::uint32_t GroundCircuit::mk_and(std::vector<std::uint32_t> children) {
  std::vector<std::uint32_t> kept;
  for (std::uint32_t c : children) {
    if (c == kFalse) return kFalse;
    if (c == kTrue) continue;
    if (nodes_[c].kind == Kind::And) {
      kept.insert(kept.end(), nodes_[c].children.begin(), nodes_[c].children.end());
    } else {
      kept.push_back(c);
    }
  }
  if (kept.empty()) return kTrue;
  if (kept.size() == 1) return kept[0];
  nodes_.push_back({Kind::And, false, 0, std::move(kept)});
  return static_cast<std::uint32_t>(nodes_.size() - 1);
}

std::uint32_t GroundCircuit::mk_or(std::vector<std::uint32_t> children) {
  std::vector<std::uint32_t> kept;
  for (std::uint32_t c : children) {
    if (c == kTrue) return kTrue;
    if (c == kFalse) continue;
    if (nodes_[c].kind == Kind::Or) {
      kept.insert(kept.end(), nodes_[c].children.begin(), nodes_[c].children.end());
    } else {
      kept.push_back(c);
    }
  }
  if (kept.empty()) return kFalse;
  if (kept.size() == 1) return kept[0];
  nodes_.push_back({Kind::Or, false, 0, std::move(kept)});
  return static_cast<std::uint32_t>(nodes_.size() - 1);
}

std::uint32_t GroundCircuit::intern_variable(const GroundAtom& atom) {
  std::string key = std::to_string(atom.rel);
  for (unsigned a : atom.args) key += "," + std::to_string(a);
  auto it = var_index_.find(key);
  if (it != var_index_.end()) return it->second;
  std::uint32_t id = static_cast<std::uint32_t>(vars_.size());
  vars_.push_back(atom);
  var_index_.emplace(std::move(key), id);
  return id;
}

bool GroundCircuit::eval_node(std::uint32_t id,
                              const std::vector<std::int8_t>& assignment) const {
  const Node& nd = nodes_[id];
  switch (nd.kind) {
    case Kind::Const:
      return nd.value;
    case Kind::Lit:
      return (assignment[nd.var] != 0) == nd.value;
    case Kind::And:
      for (std::uint32_t c : nd.children)
        if (!eval_node(c, assignment)) return false;
      return true;
    case Kind::Or:
      for (std::uint32_t c : nd.children)
        if (eval_node(c, assignment)) return true;
      return false;
  }
  return false;
}

bool GroundCircuit::eval(const std::vector<std::int8_t>& assignment) const {
  return eval_node(root_, assignment);
}

std::string GroundCircuit::variable_name(std::uint32_t var, const Vocabulary& vocab) const {
  const GroundAtom& atom = vars_[var];
  std::string out = vocab.symbol(atom.rel).name;
  if (!atom.args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < atom.args.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(atom.args[i]);
    }
    out += ')';
  }
  return out;
}

namespace {

struct LineageBuilder {
  GroundCircuit* circuit;
  const Vocabulary* vocab;
  unsigned n;
  std::map<std::string, unsigned> env;

  // `positive` tracks the polarity of the enclosing negations so that the
  // produced circuit has negation on literals only.
  std::uint32_t build(const Formula& f, bool positive) {
    switch (f->kind) {
      case FormulaKind::Atom: {
        std::size_t rel = vocab->index_of(f->relation);
        if (vocab->symbol(rel).arity != f->args.size())
          throw ValidationError("arity mismatch on '" + f->relation + "'");
        GroundAtom atom;
        atom.rel = static_cast<std::uint32_t>(rel);
        for (const auto& v : f->args) {
          auto it = env.find(v);
          if (it == env.end()) throw ValidationError("free variable '" + v + "'");
          atom.args.push_back(it->second);
        }
        return circuit->mk_lit(circuit->intern_variable(atom), positive);
      }
      case FormulaKind::Equal: {
        auto a = env.find(f->args[0]);
        auto b = env.find(f->args[1]);
        if (a == env.end() || b == env.end())
          throw ValidationError("free variable in equality");
        return circuit->mk_const((a->second == b->second) == positive);
      }
      case FormulaKind::True:
        return circuit->mk_const(positive);
      case FormulaKind::False:
        return circuit->mk_const(!positive);
      case FormulaKind::Not:
        return build(f->left, !positive);
      case FormulaKind::And: {
        std::vector<std::uint32_t> kids{build(f->left, positive), build(f->right, positive)};
        return positive ? circuit->mk_and(std::move(kids)) : circuit->mk_or(std::move(kids));
      }
      case FormulaKind::Or: {
        std::vector<std::uint32_t> kids{build(f->left, positive), build(f->right, positive)};
        return positive ? circuit->mk_or(std::move(kids)) : circuit->mk_and(std::move(kids));
      }
      case FormulaKind::Implies: {
        std::vector<std::uint32_t> kids{build(f->left, !positive), build(f->right, positive)};
        return positive ? circuit->mk_or(std::move(kids)) : circuit->mk_and(std::move(kids));
      }
      case FormulaKind::Iff: {
        // (a & b) | (!a & !b), negated: (a & !b) | (!a & b)
        std::uint32_t pp = circuit->mk_and({build(f->left, true), build(f->right, positive)});
        std::uint32_t nn =
            circuit->mk_and({build(f->left, false), build(f->right, !positive)});
        return circuit->mk_or({pp, nn});
      }
      case FormulaKind::Forall:
      case FormulaKind::Exists: {
        bool conj = (f->kind == FormulaKind::Forall) == positive;
        std::vector<std::uint32_t> kids;
        kids.reserve(n);
        auto saved_it = env.find(f->var);
        bool had = saved_it != env.end();
        unsigned saved = had ? saved_it->second : 0;
        for (unsigned a = 1; a <= n; ++a) {
          env[f->var] = a;
          kids.push_back(build(f->left, positive));
          // early constant fold
          if (conj && kids.back() == GroundCircuit::kFalse) break;
          if (!conj && kids.back() == GroundCircuit::kTrue) break;
        }
        if (had) env[f->var] = saved; else env.erase(f->var);
        return conj ? circuit->mk_and(std::move(kids)) : circuit->mk_or(std::move(kids));
      }
    }
    return GroundCircuit::kFalse;
  }
};

}  // namespace

GroundCircuit lineage(const Formula& sentence, unsigned n, const Vocabulary& vocab) {
  if (!is_sentence(sentence))
    throw ValidationError("lineage: formula has free variables");
  GroundCircuit circuit;
  LineageBuilder builder{&circuit, &vocab, n, {}};
  circuit.set_root(builder.build(sentence, true));
  return circuit;
}

}  // namespace liftcount
