#pragma once

// Shared test helpers: vocabularies, random sentence generation, and the
// small independent oracles the suites check the engines against.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "liftcount/cq.hpp"
#include "liftcount/formula.hpp"
#include "liftcount/numbers.hpp"
#include "liftcount/parser.hpp"
#include "liftcount/vocabulary.hpp"

namespace test_support {

using namespace liftcount;

inline Vocabulary unit_vocab(
    const std::vector<std::pair<std::string, unsigned>>& symbols) {
  Vocabulary v;
  for (const auto& [name, arity] : symbols) v.add_relation(name, arity);
  return v;
}

inline Formula parse_with(const Vocabulary& vocab, const std::string& text) {
  return parse_formula(text, vocab);
}

// --- random FO2 sentences over {R/2, U/1, V/1} ------------------------------

struct SentenceGen {
  std::mt19937 rng;
  bool allow_equality = false;
  bool allow_nullary = false;

  explicit SentenceGen(unsigned seed) : rng(seed) {}

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  Formula atom(const std::vector<std::string>& vars) {
    const std::string& a = vars[pick(0, static_cast<int>(vars.size()) - 1)];
    const std::string& b = vars[pick(0, static_cast<int>(vars.size()) - 1)];
    int kind = pick(0, allow_nullary ? 4 : 3);
    switch (kind) {
      case 0: return f_atom("R", {a, b});
      case 1: return f_atom("U", {a});
      case 2: return f_atom("V", {b});
      case 3:
        if (allow_equality) return f_eq(a, b);
        return f_atom("R", {b, a});
      default: return f_atom("P");
    }
  }

  Formula matrix(const std::vector<std::string>& vars, int depth) {
    if (depth == 0 || pick(0, 3) == 0) return atom(vars);
    switch (pick(0, 4)) {
      case 0: return f_not(matrix(vars, depth - 1));
      case 1: return f_and(matrix(vars, depth - 1), matrix(vars, depth - 1));
      case 2: return f_or(matrix(vars, depth - 1), matrix(vars, depth - 1));
      case 3: return f_implies(matrix(vars, depth - 1), matrix(vars, depth - 1));
      default: return f_iff(matrix(vars, depth - 1), matrix(vars, depth - 1));
    }
  }

  // prenex-style sentence with a random prefix over x, y
  Formula sentence() {
    int quantifiers = allow_nullary ? pick(0, 2) : pick(1, 2);
    std::vector<std::string> vars;
    for (int i = 0; i < quantifiers; ++i) vars.push_back(i == 0 ? "x" : "y");
    Formula body = quantifiers == 0 ? (allow_nullary ? f_atom("P") : f_true())
                                    : matrix(vars, 2);
    for (int i = quantifiers - 1; i >= 0; --i)
      body = pick(0, 1) ? f_forall(vars[i], body) : f_exists(vars[i], body);
    return body;
  }

  // sentences with nesting and boolean combinations of quantified parts
  Formula nested_sentence() {
    switch (pick(0, 3)) {
      case 0:
        return f_or(f_exists("x", matrix({"x"}, 1)), f_forall("x", matrix({"x"}, 1)));
      case 1:
        return f_forall("x", f_implies(matrix({"x"}, 1),
                                       f_exists("y", matrix({"x", "y"}, 1))));
      case 2:
        return f_exists("x", f_and(matrix({"x"}, 1),
                                   f_forall("y", matrix({"x", "y"}, 1))));
      default:
        return f_not(f_forall("x", f_exists("y", matrix({"x", "y"}, 1))));
    }
  }
};

// --- independent oracle for per-variable-domain CQs -------------------------
//
// Enumerates all subsets of the union of the relations' tuple spaces (the
// tuple space of an edge is the product of its variables' domains) and adds
// the weight of every world containing a full match.
inline Rational cq_oracle(const QueryHypergraph& query) {
  const auto& vars = query.variables();
  const auto& edges = query.edges();

  std::vector<std::size_t> edge_offset;
  std::size_t total_bits = 0;
  std::vector<std::vector<std::int64_t>> strides(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    edge_offset.push_back(total_bits);
    std::int64_t space = 1;
    for (std::size_t v : edges[e].vars) space *= vars[v].domain;
    total_bits += static_cast<std::size_t>(space);
  }
  if (total_bits > 24) throw std::runtime_error("cq_oracle: too many ground tuples");

  // tuple index of edge e under an assignment
  auto tuple_index = [&](std::size_t e, const std::vector<std::int64_t>& assignment) {
    std::int64_t idx = 0;
    for (std::size_t v : edges[e].vars) idx = idx * vars[v].domain + assignment[v];
    return edge_offset[e] + static_cast<std::size_t>(idx);
  };

  bool empty_domain = false;
  for (const auto& v : vars)
    if (v.domain == 0) empty_domain = true;
  if (empty_domain) return Rational{0};

  Rational total{0};
  for (std::uint64_t world = 0; world < (std::uint64_t{1} << total_bits); ++world) {
    // does some assignment satisfy every edge?
    bool sat = false;
    std::vector<std::int64_t> assignment(vars.size(), 0);
    for (;;) {
      bool all = true;
      for (std::size_t e = 0; e < edges.size() && all; ++e)
        if (!((world >> tuple_index(e, assignment)) & 1)) all = false;
      if (all) {
        sat = true;
        break;
      }
      std::size_t i = vars.size();
      bool done = true;
      while (i-- > 0) {
        if (assignment[i] + 1 < vars[i].domain) {
          ++assignment[i];
          for (std::size_t j = i + 1; j < vars.size(); ++j) assignment[j] = 0;
          done = false;
          break;
        }
      }
      if (done) break;
    }
    if (!sat) continue;
    Rational weight{1};
    for (std::size_t b = 0; b < total_bits; ++b) {
      std::size_t e = edges.size() - 1;
      while (edge_offset[e] > b) --e;
      weight *= ((world >> b) & 1) ? edges[e].p : Rational{1} - edges[e].p;
    }
    total += weight;
  }
  return total;
}

}  // namespace test_support
