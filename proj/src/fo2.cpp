#include "liftcount/fo2.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "liftcount/analyze.hpp"
#include "liftcount/combinatorics.hpp"
#include "liftcount/errors.hpp"
#include "liftcount/normal.hpp"
#include "liftcount/oracle.hpp"

namespace liftcount {

namespace {

// ---------------------------------------------------------------------------
// Matrix evaluation over one or two generic elements
// ---------------------------------------------------------------------------

struct MatrixSym {
  std::string name;
  unsigned arity;
  Rational w, wbar;                                 // original weights
  Integer sw, swbar;                                // denominator-cleared
  Integer scale;                                    // lcm of the denominators
  std::vector<std::vector<std::uint8_t>> patterns;  // mixed patterns over {0,1}
  std::size_t slot_offset;                          // into the pair-slot space
};

// Resolves an atom to either the one-atom of an element or a pair slot, given
// the elements the two matrix variables stand for.
struct AtomRef {
  bool is_pair;
  std::size_t sym;
  std::size_t slot;  // pair-slot index when is_pair
  int element;       // 0 or 1 when !is_pair (relative to the pair (a,b))
};

class MatrixEvaluator {
 public:
  MatrixEvaluator(const Formula& matrix, std::vector<MatrixSym> syms,
                  std::string var_x, std::string var_y)
      : matrix_(matrix), syms_(std::move(syms)), x_(std::move(var_x)), y_(std::move(var_y)) {}

  const std::vector<MatrixSym>& syms() const { return syms_; }

  std::size_t pair_slot_count() const {
    std::size_t total = 0;
    for (const auto& s : syms_) total += s.patterns.size();
    return total;
  }

  // cell_of_x/cell_of_y give 1-type bits per symbol; pair_bits per slot,
  // relative to the ordered pair (element of x, element of y) when
  // x_elem = 0, y_elem = 1 (and mirrored when the roles swap).
  bool eval(int x_elem, int y_elem, std::size_t cell_of_0, std::size_t cell_of_1,
            std::uint64_t pair_bits) const {
    return eval_rec(matrix_, x_elem, y_elem, cell_of_0, cell_of_1, pair_bits);
  }

 private:
  bool atom_value(const FormulaNode& atom, int x_elem, int y_elem, std::size_t cell_of_0,
                  std::size_t cell_of_1, std::uint64_t pair_bits) const {
    std::size_t sym = 0;
    while (syms_[sym].name != atom.relation) ++sym;
    std::vector<std::uint8_t> pattern;
    pattern.reserve(atom.args.size());
    bool all0 = true, all1 = true;
    for (const auto& arg : atom.args) {
      int elem = arg == x_ ? x_elem : y_elem;
      pattern.push_back(static_cast<std::uint8_t>(elem));
      (elem == 0 ? all1 : all0) = false;
    }
    if (all0) return (cell_of_0 >> sym) & 1;
    if (all1) return (cell_of_1 >> sym) & 1;
    const auto& pats = syms_[sym].patterns;
    std::size_t slot = syms_[sym].slot_offset;
    for (std::size_t i = 0; i < pats.size(); ++i)
      if (pats[i] == pattern) {
        slot += i;
        break;
      }
    return (pair_bits >> slot) & 1;
  }

  bool eval_rec(const Formula& f, int xe, int ye, std::size_t c0, std::size_t c1,
                std::uint64_t bits) const {
    switch (f->kind) {
      case FormulaKind::Atom:
        return atom_value(*f, xe, ye, c0, c1, bits);
      case FormulaKind::True:
        return true;
      case FormulaKind::False:
        return false;
      case FormulaKind::Not:
        return !eval_rec(f->left, xe, ye, c0, c1, bits);
      case FormulaKind::And:
        return eval_rec(f->left, xe, ye, c0, c1, bits) &&
               eval_rec(f->right, xe, ye, c0, c1, bits);
      case FormulaKind::Or:
        return eval_rec(f->left, xe, ye, c0, c1, bits) ||
               eval_rec(f->right, xe, ye, c0, c1, bits);
      case FormulaKind::Implies:
        return !eval_rec(f->left, xe, ye, c0, c1, bits) ||
               eval_rec(f->right, xe, ye, c0, c1, bits);
      case FormulaKind::Iff:
        return eval_rec(f->left, xe, ye, c0, c1, bits) ==
               eval_rec(f->right, xe, ye, c0, c1, bits);
      default:
        throw ValidationError("cell evaluation: unexpected node in matrix");
    }
  }

  Formula matrix_;
  std::vector<MatrixSym> syms_;
  std::string x_, y_;
};

std::vector<MatrixSym> collect_matrix_syms(const std::map<std::string, unsigned>& used,
                                           const Vocabulary& vocab,
                                           const EngineLimits& limits) {
  std::vector<MatrixSym> syms;
  for (const auto& [name, arity] : used) {
    if (arity == 0) continue;
    MatrixSym s;
    s.name = name;
    s.arity = vocab.arity_of(name);
    s.w = vocab.weight(name);
    s.wbar = vocab.cweight(name);
    Integer denom_lcm = boost::multiprecision::lcm(denominator_of(s.w), denominator_of(s.wbar));
    s.scale = denom_lcm;
    s.sw = numerator_of(s.w) * (denom_lcm / denominator_of(s.w));
    s.swbar = numerator_of(s.wbar) * (denom_lcm / denominator_of(s.wbar));
    // all argument patterns over two elements except the two constant ones
    for (std::uint64_t code = 1; code + 1 < (std::uint64_t{1} << s.arity); ++code) {
      std::vector<std::uint8_t> pattern(s.arity);
      for (unsigned i = 0; i < s.arity; ++i) pattern[i] = (code >> i) & 1;
      s.patterns.push_back(std::move(pattern));
    }
    syms.push_back(std::move(s));
  }
  std::size_t slots = 0;
  for (auto& s : syms) {
    s.slot_offset = slots;
    slots += s.patterns.size();
  }
  if (syms.size() >= 32 || (std::size_t{1} << syms.size()) > limits.cell_cap)
    throw ResourceCapError("cell decomposition needs 2^" + std::to_string(syms.size()) +
                           " cells, cap is " + std::to_string(limits.cell_cap));
  if (slots > limits.pair_bits_cap)
    throw ResourceCapError("pair enumeration needs " + std::to_string(slots) +
                           " ground-atom bits, cap is " +
                           std::to_string(limits.pair_bits_cap));
  return syms;
}

// ---------------------------------------------------------------------------
// Cell machine: integer-scaled t / r tables plus the composition sum
// ---------------------------------------------------------------------------

struct CellMachine {
  std::vector<MatrixSym> syms;
  std::size_t cell_count = 1;
  std::vector<Integer> t;               // per cell
  std::vector<std::vector<Integer>> r;  // symmetric; diagonal is the s vector

  void build(const MatrixEvaluator& ev) {
    syms = ev.syms();
    const std::size_t k = syms.size();
    cell_count = std::size_t{1} << k;
    const std::size_t slots = ev.pair_slot_count();

    t.assign(cell_count, Integer{0});
    for (std::size_t c = 0; c < cell_count; ++c) {
      if (!ev.eval(0, 0, c, c, 0)) continue;  // pair bits are irrelevant here
      Integer weight{1};
      for (std::size_t s = 0; s < k; ++s)
        weight *= ((c >> s) & 1) ? syms[s].sw : syms[s].swbar;
      t[c] = weight;
    }

    std::vector<Integer> slot_weight(std::size_t{1} << slots, Integer{1});
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << slots); ++code) {
      Integer weight{1};
      for (std::size_t s = 0; s < k; ++s)
        for (std::size_t p = 0; p < syms[s].patterns.size(); ++p)
          weight *= ((code >> (syms[s].slot_offset + p)) & 1) ? syms[s].sw : syms[s].swbar;
      slot_weight[code] = std::move(weight);
    }

    r.assign(cell_count, std::vector<Integer>(cell_count, Integer{0}));
    for (std::size_t i = 0; i < cell_count; ++i) {
      for (std::size_t j = i; j < cell_count; ++j) {
        Integer sum{0};
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << slots); ++code) {
          // m(a,b) with a in cell i, b in cell j, then m(b,a)
          if (!ev.eval(0, 1, i, j, code)) continue;
          if (!ev.eval(1, 0, i, j, code)) continue;
          sum += slot_weight[code];
        }
        r[i][j] = sum;
        r[j][i] = std::move(sum);
      }
    }
  }

  // sum over compositions (n_1..n_L) of n of
  //   multinomial * prod t_i^{n_i} * prod s_i^{C(n_i,2)} * prod_{i<j} r_ij^{n_i n_j}
  Integer composition_sum(unsigned n) const {
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < cell_count; ++i)
      if (t[i] != 0) active.push_back(i);
    if (n == 0) return Integer{1};
    if (active.empty()) return Integer{0};
    const std::size_t A = active.size();

    // power tables: t_i^k and s_i^{C(k,2)}
    std::vector<std::vector<Integer>> pow_t(A), pow_s(A);
    for (std::size_t a = 0; a < A; ++a) {
      pow_t[a].resize(n + 1);
      pow_s[a].resize(n + 1);
      pow_t[a][0] = 1;
      pow_s[a][0] = 1;
      Integer srun{1};  // s^{C(k,2)} built incrementally: * s^(k-1) each step
      for (unsigned k = 1; k <= n; ++k) {
        pow_t[a][k] = pow_t[a][k - 1] * t[active[a]];
        if (k >= 2) srun *= boost::multiprecision::pow(r[active[a]][active[a]],
                                                       static_cast<unsigned>(k - 1));
        pow_s[a][k] = srun;
      }
    }

    Integer total{0};
    std::function<void(std::size_t, unsigned, const Integer&, const std::vector<Integer>&)>
        rec = [&](std::size_t idx, unsigned rem, const Integer& partial,
                  const std::vector<Integer>& rho) {
          if (idx + 1 == A) {
            Integer f = pow_t[idx][rem] * pow_s[idx][rem];
            if (rem > 0 && f != 0)
              f *= boost::multiprecision::pow(rho[idx], rem);
            if (f != 0) total += partial * f;
            return;
          }
          std::vector<Integer> child_rho = rho;
          Integer binom_run{1};
          Integer rho_pow{1};
          for (unsigned k = 0; k <= rem; ++k) {
            if (k > 0) {
              binom_run = binom_run * (rem - k + 1) / k;
              rho_pow *= rho[idx];
              for (std::size_t j = idx + 1; j < A; ++j)
                child_rho[j] *= r[active[idx]][active[j]];
            }
            Integer f = binom_run * pow_t[idx][k] * pow_s[idx][k] * rho_pow;
            if (f != 0) rec(idx + 1, rem - k, partial * f, child_rho);
          }
        };
    rec(0, n, Integer{1}, std::vector<Integer>(A, Integer{1}));
    return total;
  }

  // Rational correction for the denominator clearing plus the factor for the
  // ground tuples with three or more distinct constants (arity >= 3 symbols).
  Rational corrections(unsigned n) const {
    Rational out{1};
    Integer pairs = binomial(n, 2);
    for (const auto& s : syms) {
      Integer covered = Integer{n} + pairs * static_cast<std::int64_t>(s.patterns.size());
      if (s.scale != 1)
        out /= Rational{boost::multiprecision::pow(
            s.scale, static_cast<unsigned>(covered.convert_to<std::uint64_t>()))};
      Integer free_tuples = int_pow(Integer{n}, s.arity) - covered;
      if (free_tuples > 0) {
        Rational base = s.w + s.wbar;
        if (base == 0) return Rational{0};  // unconstrained zero-sum tuples
        out *= rat_pow(base, free_tuples.convert_to<std::int64_t>());
      }
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// Pipeline: conjunct splitting, definitional flattening, Skolemization
// ---------------------------------------------------------------------------

void split_conjuncts(const Formula& f, std::vector<Formula>& out) {
  if (f->kind == FormulaKind::And) {
    split_conjuncts(f->left, out);
    split_conjuncts(f->right, out);
  } else {
    out.push_back(f);
  }
}

bool quantifier_free(const Formula& f) {
  switch (f->kind) {
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return false;
    case FormulaKind::Not:
      return quantifier_free(f->left);
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      return quantifier_free(f->left) && quantifier_free(f->right);
    default:
      return true;
  }
}

// Deepest quantified subformula whose body is quantifier-free; the root chain
// is excluded by the caller's prefix-size check.
Formula find_innermost_quantifier(const Formula& f) {
  switch (f->kind) {
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      Formula inner = find_innermost_quantifier(f->left);
      if (inner) return inner;
      return quantifier_free(f->left) ? f : nullptr;
    }
    case FormulaKind::Not:
      return find_innermost_quantifier(f->left);
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff: {
      Formula inner = find_innermost_quantifier(f->left);
      if (inner) return inner;
      return find_innermost_quantifier(f->right);
    }
    default:
      return nullptr;
  }
}

Formula replace_all(const Formula& f, const Formula& target, const Formula& replacement) {
  if (structurally_equal(f, target)) return replacement;
  switch (f->kind) {
    case FormulaKind::Atom:
    case FormulaKind::Equal:
    case FormulaKind::True:
    case FormulaKind::False:
      return f;
    case FormulaKind::Not:
      return f_not(replace_all(f->left, target, replacement));
    case FormulaKind::Forall:
      return f_forall(f->var, replace_all(f->left, target, replacement));
    case FormulaKind::Exists:
      return f_exists(f->var, replace_all(f->left, target, replacement));
    default: {
      auto n = std::make_shared<FormulaNode>();
      n->kind = f->kind;
      n->left = replace_all(f->left, target, replacement);
      n->right = replace_all(f->right, target, replacement);
      return n;
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Public cell_parameters (spec surface; symbols of arity <= 2 only)
// ---------------------------------------------------------------------------

CellParameters cell_parameters(const Formula& psi, const Vocabulary& vocab,
                               const EngineLimits& limits) {
  if (!quantifier_free(psi))
    throw ValidationError("cell_parameters: psi must be quantifier-free");
  std::set<std::string> vars = all_variables(psi);
  if (vars.size() > 2) throw ScopeError("cell_parameters: more than two variables");
  for (const RelationSymbol& s : vocab.symbols()) {
    if (s.arity > 2)
      throw ValidationError("cell_parameters: symbol '" + s.name + "' has arity > 2");
    if (s.arity == 0)
      throw ValidationError("cell_parameters: nullary symbol '" + s.name +
                            "'; Shannon-expand first");
  }
  for (const auto& [name, arity] : relations_used(psi)) {
    (void)arity;
    vocab.index_of(name);  // declared check
  }
  if (uses_equality(psi)) throw ValidationError("cell_parameters: equality in psi");

  // Cells range over every non-nullary vocabulary symbol, not just those in
  // psi; absent symbols show up as free (w + wbar) sums inside t, s, r.
  std::map<std::string, unsigned> used;
  for (const RelationSymbol& s : vocab.symbols()) used[s.name] = s.arity;
  std::vector<MatrixSym> syms = collect_matrix_syms(used, vocab, limits);

  std::vector<std::string> names(vars.begin(), vars.end());
  std::string x = names.size() > 0 ? names[0] : "x";
  std::string y = names.size() > 1 ? names[1] : (x == "y" ? "x2" : "y");
  MatrixEvaluator ev(psi, syms, x, y);
  CellMachine machine;
  machine.build(ev);

  CellParameters out;
  const std::size_t k = syms.size();
  for (const auto& s : syms)
    out.one_atoms.push_back(s.arity == 1 ? s.name + "(x)" : s.name + "(x,x)");
  for (std::size_t c = 0; c < machine.cell_count; ++c) {
    std::vector<bool> bits;
    for (std::size_t i = 0; i < k; ++i) bits.push_back((c >> i) & 1);
    out.cells.push_back(std::move(bits));
  }
  // undo the denominator clearing per entry
  Rational one_scale{1}, pair_scale{1};
  for (const auto& s : syms) {
    one_scale *= Rational{s.scale};
    pair_scale *= rat_pow(Rational{s.scale}, static_cast<std::int64_t>(s.patterns.size()));
  }
  for (std::size_t c = 0; c < machine.cell_count; ++c) {
    out.t.push_back(Rational{machine.t[c]} / one_scale);
    out.s.push_back(Rational{machine.r[c][c]} / pair_scale);
  }
  out.r.resize(machine.cell_count);
  for (std::size_t i = 0; i < machine.cell_count; ++i)
    for (std::size_t j = 0; j < machine.cell_count; ++j)
      out.r[i].push_back(Rational{machine.r[i][j]} / pair_scale);
  return out;
}

// ---------------------------------------------------------------------------
// Fo2Engine
// ---------------------------------------------------------------------------

struct Fo2Engine::Impl {
  EngineLimits limits;
  Formula original;
  Vocabulary input_vocab;

  // equality routing
  bool equality_mode = false;
  TransformResult removal;  // remove_equality output

  // direct mode
  Vocabulary extended;  // input vocab plus definitional and skolem symbols
  struct Branch {
    Rational multiplier;
    std::optional<bool> constant;  // matrix folded to a constant
    MatrixEvaluator evaluator;
    CellMachine machine;
    // non-nullary vocabulary symbols absent from this branch's matrix:
    // (w + wbar, arity) contributes (w+wbar)^(n^arity)
    std::vector<std::pair<Rational, unsigned>> absent;
    std::vector<std::pair<Rational, unsigned>> absent_nullary;  // exponent 1
  };
  std::vector<Branch> branches;

  Rational evaluate(unsigned n) const;
};

namespace {

Rational absent_factor(const std::vector<std::pair<Rational, unsigned>>& absent,
                       const std::vector<std::pair<Rational, unsigned>>& absent_nullary,
                       unsigned n) {
  Rational out{1};
  for (const auto& [base, arity] : absent) {
    Integer tuples = int_pow(Integer{n}, arity);
    if (tuples == 0) continue;
    if (base == 0) return Rational{0};
    out *= rat_pow(base, tuples.convert_to<std::int64_t>());
  }
  for (const auto& [base, arity] : absent_nullary) {
    (void)arity;
    out *= base;
  }
  return out;
}

}  // namespace

Rational Fo2Engine::Impl::evaluate(unsigned n) const {
  if (n == 0) {
    // Only nullary ground atoms exist over the empty domain; classical
    // prenexing is not empty-domain-exact, so evaluate the input directly.
    WmcOptions opts;
    opts.cap = 30;
    return direct_wfomc(original, 0, input_vocab, opts);
  }
  if (equality_mode) {
    EngineLimits lim = limits;
    return equality_recipe(removal, n,
                           [&lim](const Formula& f, unsigned m, const Vocabulary& v) {
                             return wfomc_fo2(f, m, v, lim);
                           });
  }
  Rational total{0};
  for (const Branch& b : branches) {
    if (b.multiplier == 0) continue;
    Rational value;
    if (b.constant.has_value()) {
      if (*b.constant)
        value = absent_factor(b.absent, b.absent_nullary, n);
      else
        value = n == 0 ? absent_factor(b.absent, b.absent_nullary, n) : Rational{0};
    } else {
      Integer sum = b.machine.composition_sum(n);
      value = Rational{sum} * b.machine.corrections(n) *
              absent_factor(b.absent, b.absent_nullary, n);
    }
    total += b.multiplier * value;
  }
  return total;
}

Fo2Engine Fo2Engine::build(const Formula& sentence, const Vocabulary& vocab,
                           const EngineLimits& limits) {
  if (!is_sentence(sentence)) throw ValidationError("wfomc_fo2: not a sentence");
  if (all_variables(sentence).size() > 2)
    throw ScopeError("wfomc_fo2: more than two distinct variables");

  auto impl = std::make_shared<Impl>();
  impl->limits = limits;
  impl->original = sentence;
  impl->input_vocab = vocab;

  if (uses_equality(sentence)) {
    impl->equality_mode = true;
    impl->removal = remove_equality(sentence, vocab);
    Fo2Engine engine;
    engine.impl = impl;
    return engine;
  }

  Vocabulary extended = vocab;
  std::vector<IntroducedSymbol> introduced;

  // 1. split into conjuncts; flatten nested quantification definitionally
  //    until every conjunct is prenexable with at most two variables
  std::vector<Formula> queue;
  split_conjuncts(simplify(sentence), queue);
  std::vector<PrenexForm> prenexed;
  while (!queue.empty()) {
    Formula c = queue.back();
    queue.pop_back();
    PrenexForm p = prenex(c);
    if (p.prefix.size() <= 2) {
      prenexed.push_back(std::move(p));
      continue;
    }
    Formula inner = find_innermost_quantifier(c);
    if (!inner) throw ScopeError("wfomc_fo2: conjunct cannot be flattened");
    std::set<std::string> free = free_variables(inner);
    std::vector<std::string> args(free.begin(), free.end());
    std::string name = extended.fresh_name("S");
    extended.add_relation(name, static_cast<unsigned>(args.size()), Rational{1},
                          Rational{1});
    introduced.push_back({name, "defines " + render(inner)});
    Formula head = f_atom(name, args);
    queue.push_back(replace_all(c, inner, head));
    Formula fwd = f_or(f_not(head), inner);
    Formula bwd = f_or(head, f_not(inner));
    for (auto it = args.rbegin(); it != args.rend(); ++it) {
      fwd = f_forall(*it, fwd);
      bwd = f_forall(*it, bwd);
    }
    queue.push_back(fwd);
    queue.push_back(bwd);
  }

  // 2. skolemize each conjunct; prefixes stay within two universals
  for (PrenexForm& p : prenexed)
    p = skolemize_prenex_form(std::move(p), extended, introduced);

  // 3. merge into one two-variable matrix plus a ground (nullary) constraint
  std::vector<Formula> matrix_parts, ground_parts;
  for (const PrenexForm& p : prenexed) {
    Formula m = p.matrix;
    if (p.prefix.size() >= 1) m = substitute_variable(m, p.prefix[0].var, "x");
    if (p.prefix.size() == 2) m = substitute_variable(m, p.prefix[1].var, "y");
    (p.prefix.empty() ? ground_parts : matrix_parts).push_back(m);
  }
  Formula matrix = simplify(f_and_all(matrix_parts));
  Formula ground = simplify(f_and_all(ground_parts));

  // 4. Shannon expansion over the nullary symbols of matrix and ground part
  std::vector<std::string> nullary;
  for (const auto& [name, arity] : relations_used(f_and(matrix, ground)))
    if (arity == 0) nullary.push_back(name);

  impl->extended = extended;
  const std::size_t k = nullary.size();
  for (std::size_t code = 0; code < (std::size_t{1} << k); ++code) {
    Rational multiplier{1};
    Formula m = matrix;
    Formula g = ground;
    for (std::size_t i = 0; i < k; ++i) {
      bool value = (code >> i) & 1;
      m = assign_nullary(m, nullary[i], value);
      g = assign_nullary(g, nullary[i], value);
      multiplier *= value ? extended.weight(nullary[i]) : extended.cweight(nullary[i]);
    }
    g = simplify(g);
    if (g->kind == FormulaKind::False) continue;
    if (g->kind != FormulaKind::True)
      throw ValidationError("wfomc_fo2: ground part did not fold to a constant");
    m = simplify(m);

    Impl::Branch branch{multiplier,
                        std::nullopt,
                        MatrixEvaluator(m, {}, "x", "y"),
                        {},
                        {},
                        {}};
    std::map<std::string, unsigned> used = relations_used(m);
    if (m->kind == FormulaKind::True) branch.constant = true;
    else if (m->kind == FormulaKind::False) branch.constant = false;
    else {
      std::vector<MatrixSym> syms = collect_matrix_syms(used, extended, impl->limits);
      branch.evaluator = MatrixEvaluator(m, syms, "x", "y");
      branch.machine.build(branch.evaluator);
    }
    // absent symbols contribute their free weight sums
    for (const RelationSymbol& s : extended.symbols()) {
      bool in_matrix = used.count(s.name) && s.arity > 0;
      bool expanded = std::find(nullary.begin(), nullary.end(), s.name) != nullary.end();
      if (in_matrix || expanded) continue;
      Rational base = extended.weight(s.name) + extended.cweight(s.name);
      if (s.arity == 0)
        branch.absent_nullary.push_back({base, 0});
      else
        branch.absent.push_back({base, s.arity});
    }
    impl->branches.push_back(std::move(branch));
  }

  Fo2Engine engine;
  engine.impl = impl;
  return engine;
}

Rational Fo2Engine::evaluate(unsigned n) const { return impl->evaluate(n); }

std::size_t Fo2Engine::branch_count() const { return impl->branches.size(); }

std::size_t Fo2Engine::branch_cell_count(std::size_t branch) const {
  return impl->branches[branch].machine.cell_count;
}

Rational wfomc_fo2(const Formula& sentence, unsigned n, const Vocabulary& vocab,
                   const EngineLimits& limits) {
  return Fo2Engine::build(sentence, vocab, limits).evaluate(n);
}

}  // namespace liftcount
