#include "liftcount/transforms.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "liftcount/errors.hpp"
#include "liftcount/interpolation.hpp"
#include "liftcount/normal.hpp"

namespace liftcount {

std::int64_t ScalePower::exponent_at(unsigned n) const {
  std::int64_t e = 0;
  std::int64_t pw = 1;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    e += poly[i] * pw;
    pw *= static_cast<std::int64_t>(n);
  }
  return e;
}

Rational TransformResult::multiplier_at(unsigned n) const {
  Rational m{1};
  for (const ScalePower& sp : multiplier) {
    std::int64_t e = sp.exponent_at(n);
    if (sp.base == 0 && e < 0)
      throw ValidationError(
          "transform multiplier needs division by w+wbar = 0; this corner is "
          "not supported");
    if (sp.base == 0 && e > 0) return Rational{0};
    if (sp.base != 0) m *= rat_pow(sp.base, e);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Skolemization (prenex forall* with weights (1, -1) on the fresh symbols)
// ---------------------------------------------------------------------------

namespace {

std::optional<std::size_t> first_existential(const PrenexForm& p) {
  for (std::size_t i = 0; i < p.prefix.size(); ++i)
    if (!p.prefix[i].universal) return i;
  return std::nullopt;
}

}  // namespace

PrenexForm skolemize_prenex_form(PrenexForm p, Vocabulary& vocab,
                                 std::vector<IntroducedSymbol>& introduced) {
  while (auto pos = first_existential(p)) {
    std::size_t i = *pos;
    std::string name = vocab.fresh_name("A");
    vocab.add_relation(name, static_cast<unsigned>(i), Rational{1}, Rational{-1});
    introduced.push_back({name, "skolem"});

    std::vector<std::string> args;
    for (std::size_t j = 0; j < i; ++j) args.push_back(p.prefix[j].var);

    // forall x1..xi ( not(suffix) or A(x1..x_{i-1}) ), then re-prenex.
    PrenexForm suffix{{p.prefix.begin() + i + 1, p.prefix.end()}, p.matrix};
    Formula body = f_or(f_not(prenex_to_formula(suffix)), f_atom(name, args));
    for (std::size_t j = i + 1; j-- > 0;) body = f_forall(p.prefix[j].var, body);
    p = prenex(body);
  }
  p.matrix = simplify(nnf(p.matrix));
  return p;
}

TransformResult skolemize(const Formula& sentence, const Vocabulary& vocab) {
  if (!is_sentence(sentence)) throw ValidationError("skolemize: not a sentence");
  TransformResult out;
  out.vocab = vocab;
  out.formula = prenex_to_formula(
      skolemize_prenex_form(prenex(sentence), out.vocab, out.introduced));
  return out;
}

// ---------------------------------------------------------------------------
// Negation removal on prenex forall* sentences
// ---------------------------------------------------------------------------

namespace {

// Distinct ordered free-variable list of a leaf (atom or equality).
std::vector<std::string> leaf_args(const Formula& leaf) {
  std::vector<std::string> out;
  for (const auto& v : leaf->args)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

Formula replace_subformula(const Formula& f, const Formula& target,
                           const Formula& replacement) {
  if (structurally_equal(f, target)) return replacement;
  switch (f->kind) {
    case FormulaKind::Atom:
    case FormulaKind::Equal:
    case FormulaKind::True:
    case FormulaKind::False:
      return f;
    case FormulaKind::Not:
      return f_not(replace_subformula(f->left, target, replacement));
    case FormulaKind::Forall:
      return f_forall(f->var, replace_subformula(f->left, target, replacement));
    case FormulaKind::Exists:
      return f_exists(f->var, replace_subformula(f->left, target, replacement));
    default: {
      auto n = std::make_shared<FormulaNode>();
      n->kind = f->kind;
      n->left = replace_subformula(f->left, target, replacement);
      n->right = replace_subformula(f->right, target, replacement);
      return n;
    }
  }
}

void collect_negative_leaves(const Formula& f, std::vector<Formula>& out) {
  if (f->kind == FormulaKind::Not) {
    for (const Formula& seen : out)
      if (structurally_equal(seen, f)) return;
    out.push_back(f);
    return;
  }
  if (f->kind == FormulaKind::And || f->kind == FormulaKind::Or) {
    collect_negative_leaves(f->left, out);
    collect_negative_leaves(f->right, out);
  }
}

}  // namespace

TransformResult remove_negation(const Formula& sentence, const Vocabulary& vocab) {
  if (!is_forall_star(sentence))
    throw ValidationError("remove_negation: input must be in prenex forall* form");

  std::vector<std::string> prefix;
  Formula matrix = sentence;
  while (matrix->kind == FormulaKind::Forall) {
    prefix.push_back(matrix->var);
    matrix = matrix->left;
  }

  TransformResult out;
  out.vocab = vocab;
  Formula m = nnf(matrix);

  std::vector<Formula> negative;
  collect_negative_leaves(m, negative);
  if (negative.empty() && structurally_equal(m, matrix)) {
    out.formula = sentence;  // already positive
    return out;
  }

  for (const Formula& neg : negative) {
    const Formula psi = neg->left;
    std::vector<std::string> args = leaf_args(psi);
    unsigned arity = static_cast<unsigned>(args.size());
    std::string a_name = out.vocab.fresh_name("A");
    out.vocab.add_relation(a_name, arity, Rational{1}, Rational{1});
    std::string b_name = out.vocab.fresh_name("B");
    out.vocab.add_relation(b_name, arity, Rational{1}, Rational{-1});
    out.introduced.push_back({a_name, "negation of " + render(psi)});
    out.introduced.push_back({b_name, "cancellation partner of " + a_name});

    Formula a = f_atom(a_name, args);
    Formula b = f_atom(b_name, args);
    m = replace_subformula(m, neg, a);
    m = f_and(m, f_and(f_and(f_or(psi, a), f_or(a, b)), f_or(psi, b)));
  }

  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) m = f_forall(*it, m);
  out.formula = m;
  return out;
}

// ---------------------------------------------------------------------------
// Equality removal (coefficient-extraction recipe)
// ---------------------------------------------------------------------------

namespace {

Formula replace_equality(const Formula& f, const std::string& e_name) {
  switch (f->kind) {
    case FormulaKind::Equal:
      return f_atom(e_name, {f->args[0], f->args[1]});
    case FormulaKind::Atom:
    case FormulaKind::True:
    case FormulaKind::False:
      return f;
    case FormulaKind::Not:
      return f_not(replace_equality(f->left, e_name));
    case FormulaKind::Forall:
      return f_forall(f->var, replace_equality(f->left, e_name));
    case FormulaKind::Exists:
      return f_exists(f->var, replace_equality(f->left, e_name));
    default: {
      auto n = std::make_shared<FormulaNode>();
      n->kind = f->kind;
      n->left = replace_equality(f->left, e_name);
      n->right = replace_equality(f->right, e_name);
      return n;
    }
  }
}

std::string fresh_variable(const Formula& f, const std::string& stem) {
  std::set<std::string> used = all_variables(f);
  if (!used.count(stem)) return stem;
  for (unsigned i = 1;; ++i) {
    std::string candidate = stem + std::to_string(i);
    if (!used.count(candidate)) return candidate;
  }
}

}  // namespace

TransformResult remove_equality(const Formula& sentence, const Vocabulary& vocab) {
  if (!is_sentence(sentence)) throw ValidationError("remove_equality: not a sentence");
  TransformResult out;
  out.vocab = vocab;
  if (!uses_equality(sentence)) {
    out.formula = sentence;
    return out;
  }
  std::string e_name = out.vocab.fresh_name("E");
  out.vocab.add_relation(e_name, 2, Rational{1}, Rational{1});
  out.introduced.push_back({e_name, "equality surrogate"});
  // reuse an existing variable name so the variable count does not grow
  std::set<std::string> vars = all_variables(sentence);
  std::string v = vars.empty() ? fresh_variable(sentence, "u") : *vars.begin();
  out.formula = f_and(replace_equality(sentence, e_name),
                      f_forall(v, f_atom(e_name, {v, v})));
  return out;
}

Rational equality_recipe(const TransformResult& removal, unsigned n,
                         const WfomcEngine& engine) {
  if (removal.introduced.empty())
    return engine(removal.formula, n, removal.vocab);
  const std::string& e_name = removal.introduced.front().name;
  std::size_t degree_bound = static_cast<std::size_t>(n) * n;
  PolynomialEvaluator evaluator = [&](const Rational& z) {
    Vocabulary with_z = removal.vocab;
    with_z.set_weights(e_name, z, Rational{1});
    return engine(removal.formula, n, with_z);
  };
  return extract_coefficient(evaluator, degree_bound, n);
}

// ---------------------------------------------------------------------------
// Scott's reduction
// ---------------------------------------------------------------------------

namespace {

struct ScottBuilder {
  Vocabulary vocab;
  std::vector<IntroducedSymbol> introduced;
  std::vector<Formula> sentences;
  std::map<std::string, std::pair<std::string, std::vector<std::string>>> defined;

  // Defines (bottom-up) a symbol for every distinct subformula; returns the
  // defining atom S_psi(free vars).
  Formula define(const Formula& psi) {
    std::string key = render(psi);
    if (auto it = defined.find(key); it != defined.end())
      return f_atom(it->second.first, it->second.second);

    std::set<std::string> free = free_variables(psi);
    std::vector<std::string> args(free.begin(), free.end());

    Formula body;  // theta'_psi over the symbols of the children
    switch (psi->kind) {
      case FormulaKind::Atom:
      case FormulaKind::Equal:
      case FormulaKind::True:
      case FormulaKind::False:
        body = psi;
        break;
      case FormulaKind::Not:
        body = f_not(define(psi->left));
        break;
      case FormulaKind::Forall:
      case FormulaKind::Exists: {
        Formula inner = define(psi->left);
        body = psi->kind == FormulaKind::Forall ? f_forall(psi->var, inner)
                                                : f_exists(psi->var, inner);
        break;
      }
      default: {
        Formula l = define(psi->left);
        Formula r = define(psi->right);
        auto n = std::make_shared<FormulaNode>();
        n->kind = psi->kind;
        n->left = l;
        n->right = r;
        body = n;
        break;
      }
    }

    std::string name = vocab.fresh_name("S");
    vocab.add_relation(name, static_cast<unsigned>(args.size()), Rational{1}, Rational{1});
    introduced.push_back({name, "defines " + key});
    defined.emplace(key, std::make_pair(name, args));
    Formula head = f_atom(name, args);

    if ((psi->kind == FormulaKind::Forall || psi->kind == FormulaKind::Exists) &&
        !args.empty()) {
      // Split the biconditional so each conjunct is prenex. The leading
      // universals over the head's arguments keep both halves vacuous on the
      // empty domain, so the split is exact at every n.
      Formula inner = body->left;  // S of the child, under psi's quantifier
      Formula fwd = f_or(f_not(head), inner);  // head -> Q x inner
      Formula bwd = f_or(head, f_not(inner));  // not(Q x inner) -> not head
      Formula s1 = psi->kind == FormulaKind::Forall ? f_forall(psi->var, fwd)
                                                    : f_exists(psi->var, fwd);
      Formula s2 = psi->kind == FormulaKind::Forall ? f_exists(psi->var, bwd)
                                                    : f_forall(psi->var, bwd);
      for (auto it = args.rbegin(); it != args.rend(); ++it) s1 = f_forall(*it, s1);
      for (auto it = args.rbegin(); it != args.rend(); ++it) s2 = f_forall(*it, s2);
      sentences.push_back(s1);
      sentences.push_back(s2);
    } else if (psi->kind == FormulaKind::Forall || psi->kind == FormulaKind::Exists) {
      // Nullary head: no prenex sentence can track the head's truth value on
      // the empty domain, so the definitional biconditional stays unsplit.
      sentences.push_back(f_iff(head, body));
    } else {
      Formula def = f_iff(head, body);
      for (auto it = args.rbegin(); it != args.rend(); ++it) def = f_forall(*it, def);
      sentences.push_back(def);
    }
    return head;
  }
};

}  // namespace

TransformResult scott_reduce(const Formula& sentence, const Vocabulary& vocab) {
  if (!is_sentence(sentence)) throw ValidationError("scott_reduce: not a sentence");
  ScottBuilder builder;
  builder.vocab = vocab;
  Formula root = builder.define(sentence);

  TransformResult out;
  out.vocab = builder.vocab;
  out.introduced = builder.introduced;
  std::vector<Formula> parts{root};
  parts.insert(parts.end(), builder.sentences.begin(), builder.sentences.end());
  out.formula = f_and_all(parts);
  return out;
}

// ---------------------------------------------------------------------------
// Arity reduction for FO2 input
// ---------------------------------------------------------------------------

namespace {

// Pattern of an atom's argument tuple: block index of each position, blocks
// numbered by first occurrence. (x,y,x) -> 010, (y,y,y) -> 000.
std::vector<unsigned> atom_pattern(const std::vector<std::string>& args,
                                   std::vector<std::string>& block_vars) {
  std::vector<unsigned> pattern;
  block_vars.clear();
  for (const auto& v : args) {
    auto it = std::find(block_vars.begin(), block_vars.end(), v);
    if (it == block_vars.end()) {
      block_vars.push_back(v);
      pattern.push_back(static_cast<unsigned>(block_vars.size() - 1));
    } else {
      pattern.push_back(static_cast<unsigned>(it - block_vars.begin()));
    }
  }
  return pattern;
}

std::string pattern_key(const std::vector<unsigned>& pattern) {
  std::string key;
  for (unsigned p : pattern) key += static_cast<char>('0' + p);
  return key;
}

struct RelationReduction {
  std::string delta_name;                      // unary symbol for the all-equal class
  std::map<std::string, std::string> pair_symbols;  // 2-block pattern -> symbol
  bool guarded = false;                        // case with equality guards
};

void collect_big_atoms(const Formula& f, const Vocabulary& vocab,
                       std::map<std::string, std::set<std::string>>& patterns) {
  switch (f->kind) {
    case FormulaKind::Atom:
      if (vocab.arity_of(f->relation) >= 3) {
        std::vector<std::string> blocks;
        patterns[f->relation].insert(pattern_key(atom_pattern(f->args, blocks)));
      }
      return;
    case FormulaKind::Equal:
    case FormulaKind::True:
    case FormulaKind::False:
      return;
    case FormulaKind::Not:
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      collect_big_atoms(f->left, vocab, patterns);
      return;
    default:
      collect_big_atoms(f->left, vocab, patterns);
      collect_big_atoms(f->right, vocab, patterns);
      return;
  }
}

Formula rewrite_big_atoms(const Formula& f, const Vocabulary& vocab,
                          const std::map<std::string, RelationReduction>& plan) {
  switch (f->kind) {
    case FormulaKind::Atom: {
      auto it = plan.find(f->relation);
      if (it == plan.end()) return f;
      const RelationReduction& rr = it->second;
      std::vector<std::string> blocks;
      std::string key = pattern_key(atom_pattern(f->args, blocks));
      if (blocks.size() == 1) return f_atom(rr.delta_name, {blocks[0]});
      const std::string& symbol = rr.pair_symbols.at(key);
      if (!rr.guarded) return f_atom(symbol, blocks);
      Formula same = f_and(f_eq(blocks[0], blocks[1]), f_atom(rr.delta_name, {blocks[0]}));
      Formula diff = f_and(f_not(f_eq(blocks[0], blocks[1])), f_atom(symbol, blocks));
      return f_or(same, diff);
    }
    case FormulaKind::Equal:
    case FormulaKind::True:
    case FormulaKind::False:
      return f;
    case FormulaKind::Not:
      return f_not(rewrite_big_atoms(f->left, vocab, plan));
    case FormulaKind::Forall:
      return f_forall(f->var, rewrite_big_atoms(f->left, vocab, plan));
    case FormulaKind::Exists:
      return f_exists(f->var, rewrite_big_atoms(f->left, vocab, plan));
    default: {
      auto n = std::make_shared<FormulaNode>();
      n->kind = f->kind;
      n->left = rewrite_big_atoms(f->left, vocab, plan);
      n->right = rewrite_big_atoms(f->right, vocab, plan);
      return n;
    }
  }
}

}  // namespace

TransformResult reduce_arity(const Formula& sentence, const Vocabulary& vocab) {
  if (all_variables(sentence).size() > 2)
    throw ScopeError("reduce_arity: input is not FO2");

  std::map<std::string, std::set<std::string>> patterns;
  collect_big_atoms(sentence, vocab, patterns);

  TransformResult out;
  if (patterns.empty()) {
    out.formula = sentence;
    out.vocab = vocab;
    return out;
  }

  // Reduced relations leave the vocabulary; everything else carries over.
  Vocabulary reduced;
  for (const RelationSymbol& s : vocab.symbols())
    if (!patterns.count(s.name))
      reduced.add_relation(s.name, s.arity, vocab.weight(s.name), vocab.cweight(s.name));

  std::map<std::string, RelationReduction> plan;
  for (const auto& [rel, keys] : patterns) {
    unsigned arity = vocab.arity_of(rel);
    const Rational& w = vocab.weight(rel);
    const Rational& wbar = vocab.cweight(rel);
    RelationReduction rr;

    std::size_t two_block = 0;
    bool delta_used = false;
    for (const auto& key : keys) {
      if (key.find('1') == std::string::npos) delta_used = true;
      else ++two_block;
    }
    rr.guarded = two_block >= 2 || (two_block == 1 && delta_used);

    std::int64_t k = static_cast<std::int64_t>(two_block);
    std::vector<std::int64_t> poly(arity + 1, 0);
    poly[arity] += 1;  // n^arity ground tuples in total
    if (rr.guarded || two_block == 0) {
      // unary anchor owns the all-equal class
      rr.delta_name = reduced.fresh_name(rel + "_");
      reduced.add_relation(rr.delta_name, 1, w, wbar);
      out.introduced.push_back({rr.delta_name, rel + " on the all-equal class"});
      poly[1] -= 1;
      // Covered off-diagonal classes, k*(n^2-n), plus the k free diagonals
      // of the pair symbols, k*n: together k*n^2.
      if (rr.guarded) poly[2] -= k;
    }
    for (const auto& key : keys) {
      if (key.find('1') == std::string::npos) continue;
      std::string name = reduced.fresh_name(rel + "_");
      reduced.add_relation(name, 2, w, wbar);
      out.introduced.push_back({name, rel + " with argument pattern " + key});
      rr.pair_symbols[key] = name;
      if (!rr.guarded) poly[2] -= 1;  // the symbol covers n^2 tuples outright
    }
    if (std::any_of(poly.begin(), poly.end(), [](std::int64_t c) { return c != 0; }))
      out.multiplier.push_back({w + wbar, poly});
    plan[rel] = std::move(rr);
  }

  out.formula = rewrite_big_atoms(sentence, vocab, plan);
  out.vocab = std::move(reduced);
  return out;
}

// ---------------------------------------------------------------------------
// Shannon expansion of nullary symbols
// ---------------------------------------------------------------------------

ShannonExpansion shannon_expand_nullary(const Formula& sentence, const Vocabulary& vocab) {
  std::vector<std::string> nullary;
  for (const auto& [name, arity] : relations_used(sentence))
    if (arity == 0) nullary.push_back(name);

  ShannonExpansion out;
  out.vocab = Vocabulary{};
  for (const RelationSymbol& s : vocab.symbols())
    if (std::find(nullary.begin(), nullary.end(), s.name) == nullary.end())
      out.vocab.add_relation(s.name, s.arity, vocab.weight(s.name), vocab.cweight(s.name));

  const std::size_t k = nullary.size();
  for (std::size_t code = 0; code < (std::size_t{1} << k); ++code) {
    Formula branch = sentence;
    Rational multiplier{1};
    for (std::size_t i = 0; i < k; ++i) {
      bool value = (code >> i) & 1;
      branch = assign_nullary(branch, nullary[i], value);
      multiplier *= value ? vocab.weight(nullary[i]) : vocab.cweight(nullary[i]);
    }
    out.branches.push_back({simplify(branch), std::move(multiplier)});
  }
  return out;
}

}  // namespace liftcount
