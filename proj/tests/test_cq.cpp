#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liftcount/combinatorics.hpp"
#include "liftcount/cq.hpp"
#include "liftcount/errors.hpp"
#include "liftcount/parser.hpp"
#include "liftcount/structure.hpp"
#include "support.hpp"

using namespace liftcount;
using test_support::cq_oracle;
using test_support::unit_vocab;

namespace {

QueryHypergraph chain(int m, std::int64_t n, const Rational& p) {
  std::vector<QueryVariable> vars;
  for (int i = 0; i <= m; ++i) vars.push_back({"x" + std::to_string(i), n});
  std::vector<QueryEdge> edges;
  for (int i = 1; i <= m; ++i)
    edges.push_back({"R" + std::to_string(i),
                     {static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i)},
                     p});
  return QueryHypergraph(std::move(vars), std::move(edges));
}

// The chain recurrence, written directly from the rule-(a)/(b) elimination of
// the last variable; memoless since the test sizes are tiny.
Rational chain_recurrence(int m, const std::vector<std::int64_t>& domains,
                          const std::vector<Rational>& p) {
  if (m == 0) return Rational{1};
  std::int64_t n_last = domains[m];
  Rational p_iso = Rational{1} - rat_pow(Rational{1} - p[m - 1], n_last);
  std::int64_t n_prev = domains[m - 1];
  Rational total{0};
  for (std::int64_t k = 1; k <= n_prev; ++k) {
    std::vector<std::int64_t> restricted(domains.begin(), domains.begin() + m);
    restricted[m - 1] = k;
    total += Rational{binomial(static_cast<std::uint64_t>(n_prev),
                               static_cast<std::uint64_t>(k))} *
             rat_pow(p_iso, k) * rat_pow(Rational{1} - p_iso, n_prev - k) *
             chain_recurrence(m - 1, restricted, p);
  }
  return total;
}

QueryHypergraph c_gamma(std::int64_t n, const Rational& p) {
  std::vector<QueryVariable> vars{{"x", n}, {"y", n}, {"z", n}};
  std::vector<QueryEdge> edges{
      {"R", {0, 2}, p}, {"S", {0, 1, 2}, p}, {"T", {1, 2}, p}};
  return QueryHypergraph(std::move(vars), std::move(edges));
}

}  // namespace

TEST_CASE("hypergraph invariants are enforced") {
  CHECK_THROWS_AS(QueryHypergraph({{"x", 2}}, {{"R", {0}, Rational{1, 2}},
                                               {"R", {0}, Rational{1, 2}}}),
                  ValidationError);  // self-join
  CHECK_THROWS_AS(QueryHypergraph({{"x", 2}}, {{"R", {0, 0}, Rational{1, 2}}}),
                  ValidationError);  // repeated variable in one atom
  CHECK_THROWS_AS(QueryHypergraph({{"x", 2}, {"y", 2}}, {{"R", {0}, Rational{1, 2}}}),
                  ValidationError);  // y occurs in no atom
}

TEST_CASE("gamma_reduce accepts simple acyclic shapes") {
  Vocabulary v = unit_vocab({{"R", 2}, {"S", 2}});
  Formula f = parse_formula("exists x. exists y. exists z. R(x,y) & S(y,z)", v);
  QueryHypergraph q = QueryHypergraph::from_formula(f, 2, {}, {});
  GammaResult result = gamma_reduce(q);
  CHECK(result.gamma_acyclic);
  CHECK_FALSE(result.trace.empty());

  QueryHypergraph single({{"x", 3}}, {{"R", {0}, Rational{1, 2}}});
  GammaResult r2 = gamma_reduce(single);
  CHECK(r2.gamma_acyclic);
  // (a) deletes x, then the empty edge disappears
  CHECK(r2.trace.size() == 2);
  CHECK(r2.trace[0].rule == CqRule::IsolatedNode);
}

TEST_CASE("gamma_reduce rejects the gamma-cyclic query") {
  GammaResult result = gamma_reduce(c_gamma(2, Rational{1, 2}));
  CHECK_FALSE(result.gamma_acyclic);
  CHECK(result.stalled.find("S(") != std::string::npos);
}

TEST_CASE("cq_probability: one unary atom") {
  QueryHypergraph q({{"x", 2}}, {{"R", {0}, Rational{1, 2}}});
  CHECK(cq_probability(q) == Rational{3, 4});  // 1 - (1-p)^2
}

TEST_CASE("cq_probability matches the oracle on U(x) & S(x,y)") {
  std::vector<QueryVariable> vars{{"x", 2}, {"y", 2}};
  std::vector<QueryEdge> edges{{"U", {0}, Rational{1, 2}}, {"S", {0, 1}, Rational{1, 2}}};
  QueryHypergraph q(vars, edges);
  Rational value = cq_probability(q);
  CHECK(value == cq_oracle(q));
}

TEST_CASE("linear chains match the recurrence and the oracle") {
  for (int m = 1; m <= 3; ++m) {
    Rational p{1, 2};
    std::int64_t n = m <= 2 ? 2 : 2;  // keep the oracle's tuple space small
    QueryHypergraph q = chain(m, n, p);
    Rational engine = cq_probability(q);
    std::vector<std::int64_t> domains(m + 1, n);
    std::vector<Rational> probs(m, p);
    CHECK(engine == chain_recurrence(m, domains, probs));
    CHECK(engine == cq_oracle(q));
  }
  // larger domain, uneven probabilities
  QueryHypergraph q = chain(2, 3, Rational{1, 3});
  std::vector<std::int64_t> domains{3, 3, 3};
  std::vector<Rational> probs{Rational{1, 3}, Rational{1, 3}};
  CHECK(cq_probability(q) == chain_recurrence(2, domains, probs));
}

TEST_CASE("per-variable domain vectors agree with the oracle") {
  std::mt19937 rng(71);
  std::uniform_int_distribution<int> dom(1, 3), num(0, 4), den(1, 4);
  for (int trial = 0; trial < 25; ++trial) {
    QueryHypergraph q = chain(2, 1, Rational{1, 2});
    // rebuild with random domains and probabilities
    std::vector<QueryVariable> vars;
    for (int i = 0; i <= 2; ++i)
      vars.push_back({"x" + std::to_string(i), dom(rng)});
    std::vector<QueryEdge> edges;
    for (int i = 1; i <= 2; ++i)
      edges.push_back({"R" + std::to_string(i),
                       {static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i)},
                       Rational{num(rng), den(rng)}});
    QueryHypergraph query(vars, edges);
    CHECK(cq_probability(query) == cq_oracle(query));
  }
}

TEST_CASE("rule (e): edge-equivalent nodes merge with a product domain") {
  // R(x,y) & S(x,y): x and y are edge-equivalent
  std::vector<QueryVariable> vars{{"x", 2}, {"y", 3}};
  std::vector<QueryEdge> edges{{"R", {0, 1}, Rational{1, 3}},
                               {"S", {0, 1}, Rational{1, 2}}};
  QueryHypergraph q(vars, edges);
  CHECK(cq_probability(q) == cq_oracle(q));
}

TEST_CASE("probabilities outside [0,1] from negative weights are handled exactly") {
  // w = 1, wbar = -1 gives p = w/(w+wbar) undefined; use w=2, wbar=-1: p = 2
  std::vector<QueryVariable> vars{{"x", 2}, {"y", 2}};
  std::vector<QueryEdge> edges{{"U", {0}, Rational{2}}, {"S", {0, 1}, Rational{-1, 2}}};
  QueryHypergraph q(vars, edges);
  CHECK(cq_probability(q) == cq_oracle(q));
}

TEST_CASE("twenty randomized rule orders give the same value") {
  std::vector<QueryVariable> vars{{"x", 2}, {"y", 2}, {"z", 2}};
  std::vector<QueryEdge> edges{{"U", {0}, Rational{1, 3}},
                               {"R", {0, 1}, Rational{1, 2}},
                               {"S", {1, 2}, Rational{2, 3}},
                               {"T", {2}, Rational{1, 5}}};
  QueryHypergraph q(vars, edges);
  Rational reference = cq_probability(q);
  CHECK(reference == cq_oracle(q));
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    CqOptions options;
    options.randomized_order = true;
    options.seed = seed;
    CHECK(cq_probability(q, options) == reference);
  }
}

TEST_CASE("the separator covers the gamma-cyclic query, matching the oracle") {
  QueryHypergraph q = c_gamma(2, Rational{1, 2});

  // automatic path: the rules stall, the separator keeps the existential
  // semantics, and the 2^16-world oracle confirms the value
  CHECK(cq_probability(q) == cq_oracle(q));

  // the separator_rule surface is the universal closure over z: every domain
  // element must admit a witness
  Rational via_rule = separator_rule(q, "z");
  Vocabulary v = test_support::unit_vocab({{"R", 2}, {"S", 3}, {"T", 2}});
  Formula closure = parse_formula(
      "forall z. exists x. exists y. R(x,z) & S(x,y,z) & T(y,z)", v);
  Rational closure_oracle{0};
  for_each_structure(v, 2, 16, [&](const Structure& w) {
    if (!evaluate(closure, w)) return;
    Rational weight = rat_pow(Rational{1, 2}, 16);
    closure_oracle += weight;
  });
  CHECK(via_rule == closure_oracle);

  // without the separator the query is out of scope
  CqOptions no_sep;
  no_sep.allow_separator = false;
  CHECK_THROWS_AS(cq_probability(q, no_sep), ScopeError);
}

TEST_CASE("separator rule base case and error case") {
  QueryHypergraph single({{"x", 1}}, {{"R", {0}, Rational{1, 3}}});
  CHECK(separator_rule(single, "x") == Rational{1, 3});  // p^1, same as 1-(1-p)^1

  QueryHypergraph chain3 = chain(3, 2, Rational{1, 2});
  CHECK_THROWS_AS(separator_rule(chain3, "x1"), ValidationError);
}

TEST_CASE("alpha-embedding: adding a probability-1 full atom changes nothing") {
  std::vector<QueryVariable> vars{{"x", 2}, {"y", 2}};
  std::vector<QueryEdge> edges{{"U", {0}, Rational{1, 2}}, {"S", {0, 1}, Rational{1, 3}}};
  QueryHypergraph q(vars, edges);
  std::vector<QueryEdge> extended = edges;
  extended.push_back({"A", {0, 1}, Rational{1}});
  QueryHypergraph q2(vars, extended);
  CHECK(cq_probability(q) == cq_probability(q2));
  CHECK(cq_probability(q2) == cq_oracle(q2));
}

TEST_CASE("memoization keeps the chain polynomial") {
  // m = 4, n = 12 is hopeless without memoized residuals
  QueryHypergraph q = chain(4, 12, Rational{1, 2});
  Rational value = cq_probability(q);
  std::vector<std::int64_t> domains(5, 12);
  std::vector<Rational> probs(4, Rational{1, 2});
  CHECK(value == chain_recurrence(4, domains, probs));
}

TEST_CASE("single clause probabilities via duality") {
  Vocabulary v = unit_vocab({{"R", 1}});
  Formula clause = parse_formula("forall x. R(x)", v);
  std::map<std::string, Rational> p{{"R", Rational{1, 3}}};
  // Pr(forall x R(x)) = p^n
  CHECK(clause_conjunction_probability({clause}, 2, p) == Rational{1, 9});
  CHECK(clause_conjunction_probability({clause}, 0, p) == 1);
}

TEST_CASE("the three-relation clause evaluates to 161/256 at n = 2") {
  Vocabulary v = unit_vocab({{"R", 1}, {"S", 2}, {"T", 1}});
  Formula clause = parse_formula("forall x. forall y. R(x) | S(x,y) | T(y)", v);
  std::map<std::string, Rational> p{
      {"R", Rational{1, 2}}, {"S", Rational{1, 2}}, {"T", Rational{1, 2}}};
  CHECK(clause_conjunction_probability({clause}, 2, p) == Rational{161, 256});
}

TEST_CASE("two clauses over distinct symbols multiply") {
  Vocabulary v = unit_vocab({{"R", 1}, {"T", 1}});
  Formula c1 = parse_formula("forall x. R(x)", v);
  Formula c2 = parse_formula("forall x. T(x)", v);
  std::map<std::string, Rational> p{{"R", Rational{1, 2}}, {"T", Rational{1, 3}}};
  Rational expected = rat_pow(Rational{1, 2}, 2) * rat_pow(Rational{1, 3}, 2);
  CHECK(clause_conjunction_probability({c1, c2}, 2, p) == expected);
}

TEST_CASE("random two-clause conjunctions match a world-enumeration oracle") {
  std::mt19937 rng(83);
  std::uniform_int_distribution<int> num(0, 3), den(1, 3), shape(0, 2);
  Vocabulary v = unit_vocab({{"R", 1}, {"S", 2}, {"T", 1}, {"U", 1}});
  for (int trial = 0; trial < 20; ++trial) {
    const char* first[] = {"forall x. R(x)", "forall x. forall y. R(x) | S(x,y)",
                           "forall x. forall y. S(x,y) | T(y)"};
    const char* second[] = {"forall x. U(x)", "forall y. U(y)",
                            "forall y. T(y) | U(y)"};
    int a = shape(rng), b = shape(rng);
    if (a == 2 && b == 2) b = 0;  // keep the merged duals self-join-free
    Formula c1 = parse_formula(first[a], v);
    Formula c2 = parse_formula(second[b], v);
    std::map<std::string, Rational> p;
    for (const char* name : {"R", "S", "T", "U"}) p[name] = Rational{num(rng), den(rng)};

    // oracle: enumerate worlds over the mentioned relations at n = 2
    std::map<std::string, unsigned> used;
    for (const auto& [name, arity] : relations_used(f_and(c1, c2))) used[name] = arity;
    Vocabulary small;
    for (const auto& [name, arity] : used) small.add_relation(name, arity);
    Formula conj = f_and(c1, c2);
    const unsigned n = 2;
    Rational expected{0};
    for_each_structure(small, n, 16, [&](const Structure& w) {
      if (!evaluate(conj, w)) return;
      Rational weight{1};
      for (std::size_t r = 0; r < small.size(); ++r) {
        unsigned arity = small.symbol(r).arity;
        std::size_t count = 1;
        for (unsigned i = 0; i < arity; ++i) count *= n;
        for (std::size_t t = 0; t < count; ++t) {
          bool present = w.bit(w.flat_index(r, {}) + t);
          const Rational& pr = p[small.symbol(r).name];
          weight *= present ? pr : Rational{1} - pr;
        }
      }
      expected += weight;
    });
    CHECK(clause_conjunction_probability({c1, c2}, n, p) == expected);
  }
}

TEST_CASE("identical edges merge correctly even with scrambled argument order") {
  // R(x,y,z) and S(z,y,x) cover the same node set; per assignment the two
  // tuples are distinct but independent, so the merged probability multiplies
  std::vector<QueryVariable> vars{{"x", 2}, {"y", 1}, {"z", 2}};
  std::vector<QueryEdge> edges{{"R", {0, 1, 2}, Rational{1, 2}},
                               {"S", {2, 1, 0}, Rational{1, 3}}};
  QueryHypergraph q(vars, edges);
  CHECK(cq_probability(q) == cq_oracle(q));
}

TEST_CASE("probability extremes and unit domains") {
  // p = 1 edges are certain, p = 0 edges are impossible
  std::vector<QueryVariable> vars{{"x", 2}, {"y", 2}};
  QueryHypergraph sure(vars, {{"U", {0}, Rational{1}}, {"S", {0, 1}, Rational{1, 2}}});
  CHECK(cq_probability(sure) == cq_oracle(sure));
  QueryHypergraph never(vars, {{"U", {0}, Rational{0}}, {"S", {0, 1}, Rational{1, 2}}});
  CHECK(cq_probability(never) == 0);

  QueryHypergraph unit({{"x", 1}, {"y", 1}},
                       {{"U", {0}, Rational{2, 3}}, {"S", {0, 1}, Rational{1, 5}}});
  CHECK(cq_probability(unit) == cq_oracle(unit));

  QueryHypergraph empty_domain({{"x", 0}}, {{"U", {0}, Rational{1, 2}}});
  CHECK(cq_probability(empty_domain) == 0);
}

TEST_CASE("merged clauses with a shared symbol are rejected as self-joins") {
  Vocabulary v = unit_vocab({{"R", 1}});
  Formula c1 = parse_formula("forall x. R(x)", v);
  Formula c2 = parse_formula("forall y. R(y)", v);
  std::map<std::string, Rational> p{{"R", Rational{1, 2}}};
  CHECK_THROWS_AS(clause_conjunction_probability({c1, c2}, 2, p), ScopeError);
}
