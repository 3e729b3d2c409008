#include "liftcount/wmc.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "liftcount/errors.hpp"

namespace liftcount {

TupleWeighting symmetric_weighting(const GroundCircuit& circuit, const Vocabulary& vocab) {
  TupleWeighting tw;
  tw.w.reserve(circuit.variable_count());
  tw.wbar.reserve(circuit.variable_count());
  for (const GroundAtom& atom : circuit.variables()) {
    tw.w.push_back(vocab.weight_at(atom.rel));
    tw.wbar.push_back(vocab.cweight_at(atom.rel));
  }
  return tw;
}

namespace {

void check_cap(const GroundCircuit& circuit, const TupleWeighting& weights,
               const WmcOptions& options) {
  if (circuit.variable_count() > options.cap)
    throw ResourceCapError("weighted model count over " +
                           std::to_string(circuit.variable_count()) +
                           " variables exceeds the enumeration cap " +
                           std::to_string(options.cap));
  if (weights.w.size() != circuit.variable_count() ||
      weights.wbar.size() != circuit.variable_count())
    throw ValidationError("wmc: weighting does not cover the circuit variables");
}

// The solver rebuilds simplified conjuncts in a private arena; input nodes
// are copied in first so ids stay stable and nodes are never mutated.
class Solver {
 public:
  Solver(const GroundCircuit& circuit, const TupleWeighting& weights)
      : circuit_(circuit), weights_(weights) {}

  Rational run() {
    arena_.push_back({GroundCircuit::Kind::Const, true, 0, {}});
    arena_.push_back({GroundCircuit::Kind::Const, false, 0, {}});
    std::uint32_t root = import_node(circuit_.root());

    State state;
    state.assignment.assign(circuit_.variable_count(), -1);
    Rational free_factor{1};
    std::vector<char> used(circuit_.variable_count(), 0);

    if (root == kFalse) return Rational{0};
    if (root != kTrue) {
      // top-level conjunction list
      std::vector<std::uint32_t> parts;
      if (arena_[root].kind == GroundCircuit::Kind::And)
        parts = arena_[root].children;
      else
        parts = {root};
      for (std::uint32_t p : parts) {
        Conjunct c;
        c.node = p;
        collect_vars(p, c.vars);
        for (std::uint32_t v : c.vars) used[v] = 1;
        state.conjuncts.push_back(std::move(c));
      }
    }
    for (std::uint32_t v = 0; v < circuit_.variable_count(); ++v)
      if (!used[v]) free_factor *= weights_.w[v] + weights_.wbar[v];
    return free_factor * solve(std::move(state));
  }

 private:
  using Kind = GroundCircuit::Kind;
  static constexpr std::uint32_t kTrue = 0;
  static constexpr std::uint32_t kFalse = 1;

  struct Conjunct {
    std::uint32_t node;
    std::vector<std::uint32_t> vars;  // sorted, unique
  };

  struct State {
    std::vector<Conjunct> conjuncts;
    std::vector<std::int8_t> assignment;
  };

  std::uint32_t import_node(std::uint32_t id) {
    const GroundCircuit::Node& nd = circuit_.node(id);
    switch (nd.kind) {
      case Kind::Const:
        return nd.value ? kTrue : kFalse;
      case Kind::Lit:
        arena_.push_back(nd);
        return static_cast<std::uint32_t>(arena_.size() - 1);
      default: {
        GroundCircuit::Node copy{nd.kind, false, 0, {}};
        copy.children.reserve(nd.children.size());
        for (std::uint32_t c : nd.children) copy.children.push_back(import_node(c));
        arena_.push_back(std::move(copy));
        return static_cast<std::uint32_t>(arena_.size() - 1);
      }
    }
  }

  void collect_vars_rec(std::uint32_t id, std::vector<std::uint32_t>& out) const {
    const GroundCircuit::Node& nd = arena_[id];
    if (nd.kind == Kind::Lit) {
      out.push_back(nd.var);
    } else if (nd.kind != Kind::Const) {
      for (std::uint32_t c : nd.children) collect_vars_rec(c, out);
    }
  }

  void collect_vars(std::uint32_t id, std::vector<std::uint32_t>& out) const {
    collect_vars_rec(id, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }

  // Rebuilds `id` under the assignment; returns an existing id when nothing
  // below it changed.
  std::uint32_t simplify(std::uint32_t id, const std::vector<std::int8_t>& assignment) {
    const GroundCircuit::Node nd = arena_[id];
    switch (nd.kind) {
      case Kind::Const:
        return id;
      case Kind::Lit: {
        std::int8_t a = assignment[nd.var];
        if (a < 0) return id;
        return ((a != 0) == nd.value) ? kTrue : kFalse;
      }
      case Kind::And:
      case Kind::Or: {
        const bool is_and = nd.kind == Kind::And;
        const std::uint32_t absorbing = is_and ? kFalse : kTrue;
        const std::uint32_t neutral = is_and ? kTrue : kFalse;
        std::vector<std::uint32_t> kept;
        bool changed = false;
        for (std::uint32_t c : nd.children) {
          std::uint32_t s = simplify(c, assignment);
          if (s != c) changed = true;
          if (s == absorbing) return absorbing;
          if (s == neutral) continue;
          if (arena_[s].kind == nd.kind) {
            kept.insert(kept.end(), arena_[s].children.begin(), arena_[s].children.end());
          } else {
            kept.push_back(s);
          }
        }
        if (!changed) return id;
        if (kept.empty()) return neutral;
        if (kept.size() == 1) return kept[0];
        arena_.push_back({nd.kind, false, 0, std::move(kept)});
        return static_cast<std::uint32_t>(arena_.size() - 1);
      }
    }
    return id;
  }

  // Weighted sum over all assignments of the variables mentioned by the
  // conjuncts. Vars that disappear without being assigned contribute w+wbar.
  Rational solve(State state) {
    Rational factor{1};

    // Unit propagation to fixpoint.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < state.conjuncts.size(); ++i) {
        const GroundCircuit::Node& nd = arena_[state.conjuncts[i].node];
        if (nd.kind != Kind::Lit) continue;
        std::uint32_t v = nd.var;
        if (state.assignment[v] >= 0) continue;  // will resolve on resimplify
        state.assignment[v] = nd.value ? 1 : 0;
        factor *= nd.value ? weights_.w[v] : weights_.wbar[v];
        if (!resimplify_touched(state, v, factor)) return Rational{0};
        changed = true;
      }
    }

    if (state.conjuncts.empty()) return factor;

    // Split into variable-disjoint components.
    std::vector<std::size_t> parent(state.conjuncts.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    {
      std::unordered_map<std::uint32_t, std::size_t> owner;
      for (std::size_t i = 0; i < state.conjuncts.size(); ++i)
        for (std::uint32_t v : state.conjuncts[i].vars) {
          auto [it, fresh] = owner.emplace(v, i);
          if (!fresh) parent[find(i)] = find(it->second);
        }
    }
    std::unordered_map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < state.conjuncts.size(); ++i)
      groups[find(i)].push_back(i);

    if (groups.size() > 1) {
      Rational product{1};
      for (auto& [root, members] : groups) {
        State sub;
        sub.assignment = state.assignment;
        for (std::size_t i : members) sub.conjuncts.push_back(state.conjuncts[i]);
        product *= solve(std::move(sub));
        if (product == 0) return Rational{0};
      }
      return factor * product;
    }

    // Branch on the most frequent variable (smallest id on ties).
    std::unordered_map<std::uint32_t, std::size_t> freq;
    for (const Conjunct& c : state.conjuncts)
      for (std::uint32_t v : c.vars) ++freq[v];
    std::uint32_t best = 0;
    std::size_t best_count = 0;
    for (const auto& [v, count] : freq)
      if (count > best_count || (count == best_count && v < best)) {
        best = v;
        best_count = count;
      }

    Rational total{0};
    for (int value = 1; value >= 0; --value) {
      State branch = state;
      branch.assignment[best] = static_cast<std::int8_t>(value);
      Rational leaf = value ? weights_.w[best] : weights_.wbar[best];
      if (resimplify_touched(branch, best, leaf)) total += leaf * solve(std::move(branch));
    }
    return factor * total;
  }

  // Re-simplifies the conjuncts that mention `v`. Returns false when a
  // conjunct became false. Retired variables multiply their w+wbar into
  // `factor`.
  bool resimplify_touched(State& state, std::uint32_t v, Rational& factor) {
    std::vector<std::uint32_t> maybe_retired;
    std::vector<Conjunct> kept;
    kept.reserve(state.conjuncts.size());
    for (Conjunct& c : state.conjuncts) {
      if (!std::binary_search(c.vars.begin(), c.vars.end(), v)) {
        kept.push_back(std::move(c));
        continue;
      }
      std::uint32_t s = simplify(c.node, state.assignment);
      if (s == kFalse) return false;
      std::vector<std::uint32_t> new_vars;
      if (s != kTrue) collect_vars(s, new_vars);
      for (std::uint32_t old : c.vars)
        if (old != v && !std::binary_search(new_vars.begin(), new_vars.end(), old))
          maybe_retired.push_back(old);
      if (s != kTrue) kept.push_back({s, std::move(new_vars)});
    }
    state.conjuncts = std::move(kept);
    // A variable is retired only if no remaining conjunct mentions it.
    for (std::uint32_t r : maybe_retired) {
      if (state.assignment[r] >= 0) continue;
      bool mentioned = false;
      for (const Conjunct& c : state.conjuncts)
        if (std::binary_search(c.vars.begin(), c.vars.end(), r)) {
          mentioned = true;
          break;
        }
      if (!mentioned) {
        state.assignment[r] = 2;  // retired marker: weight already folded in
        factor *= weights_.w[r] + weights_.wbar[r];
      }
    }
    return true;
  }

  const GroundCircuit& circuit_;
  const TupleWeighting& weights_;
  std::vector<GroundCircuit::Node> arena_;
};

}  // namespace

Rational wmc(const GroundCircuit& circuit, const TupleWeighting& weights,
             const WmcOptions& options) {
  check_cap(circuit, weights, options);
  return Solver(circuit, weights).run();
}

Rational wmc_enumerate(const GroundCircuit& circuit, const TupleWeighting& weights,
                       const WmcOptions& options) {
  check_cap(circuit, weights, options);
  const std::size_t k = circuit.variable_count();
  std::vector<std::int8_t> assignment(k, 0);
  Rational total{0};
  const std::uint64_t limit = std::uint64_t{1} << k;
  for (std::uint64_t code = 0; code < limit; ++code) {
    for (std::size_t i = 0; i < k; ++i) assignment[i] = (code >> i) & 1;
    if (!circuit.eval(assignment)) continue;
    Rational weight{1};
    for (std::size_t i = 0; i < k; ++i)
      weight *= assignment[i] ? weights.w[i] : weights.wbar[i];
    total += weight;
  }
  return total;
}

}  // namespace liftcount
