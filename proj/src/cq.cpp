#include "liftcount/cq.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "liftcount/combinatorics.hpp"
#include "liftcount/errors.hpp"

namespace liftcount {

QueryHypergraph::QueryHypergraph(std::vector<QueryVariable> variables,
                                 std::vector<QueryEdge> edges)
    : variables_(std::move(variables)), edges_(std::move(edges)) {
  std::set<std::string> relations;
  std::vector<char> occurs(variables_.size(), 0);
  for (const QueryEdge& e : edges_) {
    if (!relations.insert(e.relation).second)
      throw ValidationError("self-join: relation '" + e.relation + "' occurs twice");
    std::set<std::size_t> seen;
    for (std::size_t v : e.vars) {
      if (v >= variables_.size()) throw ValidationError("edge references unknown variable");
      if (!seen.insert(v).second)
        throw ValidationError("repeated variable in atom of '" + e.relation + "'");
      occurs[v] = 1;
    }
  }
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (!occurs[i])
      throw ValidationError("variable '" + variables_[i].name + "' occurs in no atom");
    if (variables_[i].domain < 0) throw ValidationError("negative domain size");
  }
}

namespace {

void collect_cq(const Formula& f, std::vector<std::string>& vars,
                std::vector<Formula>& atoms) {
  switch (f->kind) {
    case FormulaKind::Exists:
      vars.push_back(f->var);
      collect_cq(f->left, vars, atoms);
      return;
    case FormulaKind::And:
      collect_cq(f->left, vars, atoms);
      collect_cq(f->right, vars, atoms);
      return;
    case FormulaKind::Atom:
      atoms.push_back(f);
      return;
    default:
      throw ValidationError(
          "not a conjunctive query: expected an existentially quantified "
          "conjunction of positive atoms");
  }
}

}  // namespace

QueryHypergraph QueryHypergraph::from_formula(
    const Formula& cq, std::int64_t default_domain,
    const std::map<std::string, std::int64_t>& domains,
    const std::map<std::string, Rational>& probabilities) {
  if (!is_sentence(cq)) throw ValidationError("conjunctive query must be a sentence");
  std::vector<std::string> names;
  std::vector<Formula> atoms;
  collect_cq(cq, names, atoms);

  std::vector<QueryVariable> variables;
  std::map<std::string, std::size_t> index;
  for (const auto& name : names) {
    if (index.count(name)) throw ValidationError("variable '" + name + "' bound twice");
    index[name] = variables.size();
    auto it = domains.find(name);
    variables.push_back({name, it != domains.end() ? it->second : default_domain});
  }

  std::vector<QueryEdge> edges;
  for (const Formula& atom : atoms) {
    QueryEdge e;
    e.relation = atom->relation;
    for (const auto& arg : atom->args) {
      auto it = index.find(arg);
      if (it == index.end()) throw ValidationError("unquantified variable '" + arg + "'");
      e.vars.push_back(it->second);
    }
    auto pit = probabilities.find(atom->relation);
    e.p = pit != probabilities.end() ? pit->second : Rational{1, 2};
    edges.push_back(std::move(e));
  }
  return QueryHypergraph(std::move(variables), std::move(edges));
}

std::string QueryHypergraph::describe() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) out << ", ";
    out << edges_[i].relation << "(";
    for (std::size_t j = 0; j < edges_[i].vars.size(); ++j) {
      if (j) out << ",";
      out << variables_[edges_[i].vars[j]].name;
    }
    out << ")";
  }
  if (edges_.empty()) out << "<empty>";
  out << " over";
  for (const auto& v : variables_) out << " " << v.name << ":" << v.domain;
  return out.str();
}

namespace {

// Mutable working copy during reduction.
struct Work {
  std::vector<QueryVariable> vars;
  std::vector<QueryEdge> edges;

  explicit Work(const QueryHypergraph& q) : vars(q.variables()), edges(q.edges()) {}

  std::size_t occurrences(std::size_t v) const {
    std::size_t count = 0;
    for (const auto& e : edges)
      count += std::count(e.vars.begin(), e.vars.end(), v) > 0 ? 1 : 0;
    return count;
  }

  std::string var_name(std::size_t v) const { return vars[v].name; }

  void drop_variable(std::size_t v) {
    for (auto& e : edges)
      for (auto& idx : e.vars)
        if (idx > v) --idx;
    vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(v));
  }

  std::string key() const {
    std::ostringstream out;
    for (const auto& v : vars) out << v.domain << ";";
    out << "|";
    // edges sorted by relation name for a canonical form
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return edges[a].relation < edges[b].relation;
    });
    for (std::size_t i : order) {
      out << edges[i].relation << "(";
      for (std::size_t v : edges[i].vars) out << v << ",";
      out << ")=" << render_rational(edges[i].p) << ";";
    }
    return out.str();
  }

  std::string describe() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i) out << ", ";
      out << edges[i].relation << "(";
      for (std::size_t j = 0; j < edges[i].vars.size(); ++j) {
        if (j) out << ",";
        out << vars[edges[i].vars[j]].name;
      }
      out << ")";
    }
    if (edges.empty()) out << "<empty>";
    return out.str();
  }
};

struct Reducer {
  CqOptions options;
  std::mt19937_64 rng;
  std::map<std::string, Rational> memo;
  std::vector<CqStep>* trace = nullptr;

  explicit Reducer(const CqOptions& opts) : options(opts), rng(opts.seed) {}

  void record(CqRule rule, const std::string& detail) {
    if (trace) trace->push_back({rule, detail});
  }

  // ---- rule applicability -------------------------------------------------

  std::optional<std::size_t> find_empty_edge(const Work& w) const {
    for (std::size_t i = 0; i < w.edges.size(); ++i)
      if (w.edges[i].vars.empty()) return i;
    return std::nullopt;
  }

  std::optional<std::pair<std::size_t, std::size_t>> find_identical_edges(
      const Work& w) const {
    for (std::size_t i = 0; i < w.edges.size(); ++i)
      for (std::size_t j = i + 1; j < w.edges.size(); ++j) {
        std::set<std::size_t> a(w.edges[i].vars.begin(), w.edges[i].vars.end());
        std::set<std::size_t> b(w.edges[j].vars.begin(), w.edges[j].vars.end());
        if (a == b) return std::make_pair(i, j);
      }
    return std::nullopt;
  }

  std::optional<std::pair<std::size_t, std::size_t>> find_edge_equivalent(
      const Work& w) const {
    for (std::size_t x = 0; x < w.vars.size(); ++x)
      for (std::size_t y = x + 1; y < w.vars.size(); ++y) {
        bool equivalent = true;
        for (const auto& e : w.edges) {
          bool has_x = std::count(e.vars.begin(), e.vars.end(), x) > 0;
          bool has_y = std::count(e.vars.begin(), e.vars.end(), y) > 0;
          if (has_x != has_y) {
            equivalent = false;
            break;
          }
        }
        if (equivalent && w.occurrences(x) > 0) return std::make_pair(x, y);
      }
    return std::nullopt;
  }

  std::optional<std::pair<std::size_t, std::size_t>> find_isolated(const Work& w) const {
    for (std::size_t v = 0; v < w.vars.size(); ++v) {
      std::size_t in_edge = w.edges.size();
      std::size_t count = 0;
      for (std::size_t i = 0; i < w.edges.size(); ++i)
        if (std::count(w.edges[i].vars.begin(), w.edges[i].vars.end(), v)) {
          in_edge = i;
          ++count;
        }
      if (count == 1) return std::make_pair(v, in_edge);
    }
    return std::nullopt;
  }

  std::optional<std::size_t> find_singleton(const Work& w) const {
    for (std::size_t i = 0; i < w.edges.size(); ++i)
      if (w.edges[i].vars.size() == 1) return i;
    return std::nullopt;
  }

  // ---- evaluation ---------------------------------------------------------

  Rational probability(Work w) {
    // a variable with an empty domain makes the existential query false
    for (const auto& v : w.vars)
      if (v.domain == 0) return Rational{0};

    // drop variables that lost all their edges
    for (std::size_t v = w.vars.size(); v-- > 0;)
      if (w.occurrences(v) == 0) w.drop_variable(v);

    if (w.edges.empty()) return Rational{1};

    std::string key = w.key();
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Rational result = reduce_step(std::move(w));
    memo.emplace(std::move(key), result);
    return result;
  }

  Rational reduce_step(Work w) {
    std::array<int, 5> order{0, 1, 2, 3, 4};  // (c) (d) (e) (a) (b)
    if (options.randomized_order)
      std::shuffle(order.begin(), order.end(), rng);

    for (int rule : order) {
      switch (rule) {
        case 0:
          if (auto i = find_empty_edge(w)) {
            Rational p = w.edges[*i].p;
            record(CqRule::EmptyEdge, w.edges[*i].relation + "()");
            w.edges.erase(w.edges.begin() + static_cast<std::ptrdiff_t>(*i));
            return p * probability(std::move(w));
          }
          break;
        case 1:
          if (auto ij = find_identical_edges(w)) {
            auto [i, j] = *ij;
            record(CqRule::IdenticalEdges,
                   w.edges[i].relation + " * " + w.edges[j].relation);
            w.edges[i].p *= w.edges[j].p;
            w.edges[i].relation += "*" + w.edges[j].relation;
            w.edges.erase(w.edges.begin() + static_cast<std::ptrdiff_t>(j));
            return probability(std::move(w));
          }
          break;
        case 2:
          if (auto xy = find_edge_equivalent(w)) {
            auto [x, y] = *xy;
            record(CqRule::EdgeEquivalentNodes, w.var_name(x) + " ~ " + w.var_name(y));
            w.vars[x].domain *= w.vars[y].domain;
            for (auto& e : w.edges)
              e.vars.erase(std::remove(e.vars.begin(), e.vars.end(), y), e.vars.end());
            w.drop_variable(y);
            return probability(std::move(w));
          }
          break;
        case 3:
          if (auto vi = find_isolated(w)) {
            auto [v, i] = *vi;
            record(CqRule::IsolatedNode, w.var_name(v));
            std::int64_t nv = w.vars[v].domain;
            w.edges[i].p = Rational{1} - rat_pow(Rational{1} - w.edges[i].p, nv);
            auto& ev = w.edges[i].vars;
            ev.erase(std::remove(ev.begin(), ev.end(), v), ev.end());
            w.drop_variable(v);
            return probability(std::move(w));
          }
          break;
        case 4:
          if (auto i = find_singleton(w)) {
            QueryEdge edge = w.edges[*i];
            std::size_t x = edge.vars[0];
            record(CqRule::SingletonEdge, edge.relation + "(" + w.var_name(x) + ")");
            w.edges.erase(w.edges.begin() + static_cast<std::ptrdiff_t>(*i));
            std::int64_t nx = w.vars[x].domain;
            Rational total{0};
            for (std::int64_t k = 0; k <= nx; ++k) {
              Work restricted = w;
              restricted.vars[x].domain = k;
              Rational residual = probability(std::move(restricted));
              if (residual == 0) continue;
              total += Rational{binomial(static_cast<std::uint64_t>(nx),
                                         static_cast<std::uint64_t>(k))} *
                       rat_pow(edge.p, k) * rat_pow(Rational{1} - edge.p, nx - k) *
                       residual;
            }
            return total;
          }
          break;
      }
    }

    // Rules stalled; a variable occurring in every atom still separates the
    // ground tuples into independent groups, one per domain element. For the
    // existential query, Pr(exists z ...) = 1 - (1 - Pr(residual))^(n_z).
    if (options.allow_separator) {
      for (std::size_t v = 0; v < w.vars.size(); ++v) {
        bool in_all = true;
        for (const auto& e : w.edges)
          if (!std::count(e.vars.begin(), e.vars.end(), v)) {
            in_all = false;
            break;
          }
        if (!in_all) continue;
        record(CqRule::Separator, w.var_name(v));
        std::int64_t nv = w.vars[v].domain;
        Work dropped = w;
        for (auto& e : dropped.edges)
          e.vars.erase(std::remove(e.vars.begin(), e.vars.end(), v), e.vars.end());
        dropped.drop_variable(v);
        Rational residual = probability(std::move(dropped));
        return Rational{1} - rat_pow(Rational{1} - residual, nv);
      }
    }

    std::ostringstream msg;
    msg << "query is not reducible by the gamma rules";
    if (options.allow_separator) msg << " or a separator variable";
    msg << ": " << w.describe();
    throw ScopeError(msg.str());
  }
};

}  // namespace

GammaResult gamma_reduce(const QueryHypergraph& query) {
  GammaResult out{true, {}, ""};
  Work w(query);
  Reducer helper{CqOptions{}};

  // Purely structural reduction; probabilities are irrelevant here.
  for (;;) {
    for (std::size_t v = w.vars.size(); v-- > 0;)
      if (w.occurrences(v) == 0) w.drop_variable(v);
    if (w.edges.empty()) return out;

    if (auto i = helper.find_empty_edge(w)) {
      out.trace.push_back({CqRule::EmptyEdge, w.edges[*i].relation + "()"});
      w.edges.erase(w.edges.begin() + static_cast<std::ptrdiff_t>(*i));
      continue;
    }
    if (auto ij = helper.find_identical_edges(w)) {
      out.trace.push_back({CqRule::IdenticalEdges, w.edges[ij->first].relation + " = " +
                                                       w.edges[ij->second].relation});
      w.edges.erase(w.edges.begin() + static_cast<std::ptrdiff_t>(ij->second));
      continue;
    }
    if (auto xy = helper.find_edge_equivalent(w)) {
      out.trace.push_back(
          {CqRule::EdgeEquivalentNodes, w.var_name(xy->first) + " ~ " + w.var_name(xy->second)});
      for (auto& e : w.edges)
        e.vars.erase(std::remove(e.vars.begin(), e.vars.end(), xy->second), e.vars.end());
      w.drop_variable(xy->second);
      continue;
    }
    if (auto vi = helper.find_isolated(w)) {
      out.trace.push_back({CqRule::IsolatedNode, w.var_name(vi->first)});
      auto& ev = w.edges[vi->second].vars;
      ev.erase(std::remove(ev.begin(), ev.end(), vi->first), ev.end());
      w.drop_variable(vi->first);
      continue;
    }
    if (auto i = helper.find_singleton(w)) {
      out.trace.push_back({CqRule::SingletonEdge, w.edges[*i].relation});
      w.edges.erase(w.edges.begin() + static_cast<std::ptrdiff_t>(*i));
      continue;
    }

    out.gamma_acyclic = false;
    out.trace.clear();
    out.stalled = w.describe();
    return out;
  }
}

Rational cq_probability(const QueryHypergraph& query, const CqOptions& options) {
  Reducer reducer(options);
  return reducer.probability(Work(query));
}

Rational separator_rule(const QueryHypergraph& query, const std::string& var) {
  Work w(query);
  std::size_t v = w.vars.size();
  for (std::size_t i = 0; i < w.vars.size(); ++i)
    if (w.vars[i].name == var) v = i;
  if (v == w.vars.size()) throw ValidationError("unknown variable '" + var + "'");
  for (const auto& e : w.edges)
    if (!std::count(e.vars.begin(), e.vars.end(), v))
      throw ValidationError("variable '" + var + "' does not occur in every atom");

  std::int64_t nv = w.vars[v].domain;
  for (auto& e : w.edges)
    e.vars.erase(std::remove(e.vars.begin(), e.vars.end(), v), e.vars.end());
  w.drop_variable(v);

  CqOptions opts;
  opts.allow_separator = true;
  Reducer reducer(opts);
  return rat_pow(reducer.probability(std::move(w)), nv);
}

// ---------------------------------------------------------------------------
// Positive clauses: duality + inclusion-exclusion
// ---------------------------------------------------------------------------

namespace {

struct ClauseAtoms {
  std::vector<std::string> vars;                       // universally quantified
  std::vector<std::pair<std::string, std::vector<std::string>>> atoms;
};

ClauseAtoms parse_clause(const Formula& clause) {
  ClauseAtoms out;
  Formula cur = clause;
  while (cur->kind == FormulaKind::Forall) {
    out.vars.push_back(cur->var);
    cur = cur->left;
  }
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    if (f->kind == FormulaKind::Or) {
      walk(f->left);
      walk(f->right);
      return;
    }
    if (f->kind != FormulaKind::Atom)
      throw ValidationError(
          "clause must be a universally quantified disjunction of positive atoms");
    out.atoms.push_back({f->relation, f->args});
  };
  walk(cur);
  return out;
}

}  // namespace

Rational clause_conjunction_probability(const std::vector<Formula>& clauses,
                                        std::int64_t n,
                                        const std::map<std::string, Rational>& probabilities,
                                        const CqOptions& options) {
  if (clauses.empty()) return Rational{1};
  std::vector<ClauseAtoms> parsed;
  for (const Formula& c : clauses) {
    if (!is_sentence(c)) throw ValidationError("clause has free variables");
    parsed.push_back(parse_clause(c));
  }

  const std::size_t k = parsed.size();
  Rational total{0};
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    // merge the selected clauses into one clause over renamed-apart variables
    std::vector<QueryVariable> vars;
    std::vector<QueryEdge> edges;
    std::map<std::string, std::size_t> var_index;  // per clause copy
    std::set<std::string> rel_seen;
    std::set<std::size_t> used_vars;
    bool quantified = false;
    for (std::size_t c = 0; c < k; ++c) {
      if (!((mask >> c) & 1)) continue;
      if (!parsed[c].vars.empty()) quantified = true;
      var_index.clear();
      for (const auto& v : parsed[c].vars) {
        var_index[v] = vars.size();
        vars.push_back({"c" + std::to_string(c) + "_" + v, n});
      }
      for (const auto& [rel, args] : parsed[c].atoms) {
        if (!rel_seen.insert(rel).second)
          throw ScopeError(
              "a merged disjunction repeats relation '" + rel +
              "'; its dual CQ has a self-join and is outside the lifted rules");
        QueryEdge e;
        e.relation = rel;
        for (const auto& a : args) {
          auto it = var_index.find(a);
          if (it == var_index.end())
            throw ValidationError("clause variable '" + a + "' is not quantified");
          e.vars.push_back(it->second);
          used_vars.insert(it->second);
        }
        auto pit = probabilities.find(rel);
        if (pit == probabilities.end())
          throw ValidationError("no probability for relation '" + rel + "'");
        e.p = Rational{1} - pit->second;  // dual: complemented relations
        edges.push_back(std::move(e));
      }
    }

    Rational pr_clause;
    if (n == 0 && quantified) {
      pr_clause = Rational{1};  // vacuous universal clause
    } else {
      // drop quantified variables that appear in no atom (vacuous for n >= 1)
      std::vector<QueryVariable> kept;
      std::vector<std::size_t> remap(vars.size());
      for (std::size_t i = 0; i < vars.size(); ++i) {
        remap[i] = kept.size();
        if (used_vars.count(i)) kept.push_back(vars[i]);
      }
      for (auto& e : edges)
        for (auto& v : e.vars) v = remap[v];
      // Pr(clause) = 1 - Pr(dual CQ over complemented relations)
      Rational dual =
          cq_probability(QueryHypergraph(std::move(kept), std::move(edges)), options);
      pr_clause = Rational{1} - dual;
    }
    std::size_t bits = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (bits % 2 == 1)
      total += pr_clause;
    else
      total -= pr_clause;
  }
  return total;
}

}  // namespace liftcount
