#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liftcount/engine.hpp"
#include "liftcount/errors.hpp"
#include "liftcount/oracle.hpp"
#include "liftcount/parser.hpp"
#include "liftcount/qs4.hpp"
#include "support.hpp"

using namespace liftcount;
using test_support::unit_vocab;

TEST_CASE("method names parse and print") {
  CHECK(MethodChoice::parse("auto").kind == MethodChoice::Kind::Auto);
  CHECK(MethodChoice::parse("fo2").kind == MethodChoice::Kind::Fo2);
  MethodChoice closed = MethodChoice::parse("closed:exists_S");
  CHECK(closed.kind == MethodChoice::Kind::Closed);
  CHECK(closed.closed_name == "exists_S");
  CHECK(closed.name() == "closed:exists_S");
  CHECK_THROWS_AS(MethodChoice::parse("fancy"), ValidationError);
}

TEST_CASE("routing prefers the most specialized engine") {
  EngineOptions options;

  Vocabulary s = unit_vocab({{"S", 2}});
  CHECK(route(qs4_formula(), s, 2, options) == MethodChoice::Kind::Qs4);

  Vocabulary cq_vocab = unit_vocab({{"U", 1}, {"S", 2}});
  Formula cq = parse_formula("exists x. exists y. U(x) & S(x,y)", cq_vocab);
  CHECK(route(cq, cq_vocab, 2, options) == MethodChoice::Kind::Cq);

  Vocabulary r = unit_vocab({{"R", 2}});
  Formula fo2 = parse_formula("forall x. exists y. R(x,y)", r);
  CHECK(route(fo2, r, 2, options) == MethodChoice::Kind::Fo2);

  Vocabulary e3 = unit_vocab({{"E", 2}});
  Formula three = parse_formula("forall x, y, z. E(x,y) & E(y,z) -> E(x,z)", e3);
  CHECK(route(three, e3, 2, options) == MethodChoice::Kind::Lineage);

  CHECK_THROWS_AS(route(three, e3, 6, options), ScopeError);
}

TEST_CASE("auto routing never changes the value") {
  EngineOptions options;
  MethodChoice autopick;  // Auto
  MethodChoice brute = MethodChoice::parse("brute");

  struct Case {
    const char* text;
    Vocabulary vocab;
  };
  std::vector<Case> cases;
  cases.push_back({"forall x. exists y. R(x,y)", unit_vocab({{"R", 2}})});
  cases.push_back({"exists x. exists y. U(x) & S(x,y)", unit_vocab({{"U", 1}, {"S", 2}})});
  cases.push_back(
      {"forall x, y, z. E(x,y) & E(y,z) -> E(x,z)", unit_vocab({{"E", 2}})});
  cases.push_back({"forall x1, x2, y1, y2. S(x1,y1) | !S(x2,y1) | S(x2,y2) | !S(x1,y2)",
                   unit_vocab({{"S", 2}})});
  for (const auto& c : cases) {
    Formula f = parse_formula(c.text, c.vocab);
    for (unsigned n = 0; n <= 2; ++n)
      CHECK(compute_wfomc(f, n, c.vocab, autopick, options) ==
            compute_wfomc(f, n, c.vocab, brute, options));
  }
}

TEST_CASE("qs4 routing handles general weights") {
  Vocabulary v;
  v.add_relation("S", 2, Rational{2}, Rational{-1, 3});
  MethodChoice qs4 = MethodChoice::parse("qs4");
  MethodChoice lineage = MethodChoice::parse("lineage");
  for (unsigned n = 1; n <= 3; ++n)
    CHECK(compute_wfomc(qs4_formula(), n, v, qs4) ==
          compute_wfomc(qs4_formula(), n, v, lineage));
  Vocabulary r = unit_vocab({{"R", 2}});
  Formula not_qs4 = parse_formula("forall x. exists y. R(x,y)", r);
  CHECK_THROWS_AS(compute_wfomc(not_qs4, 2, r, qs4), ScopeError);
}

TEST_CASE("closed-form methods answer through the same interface") {
  Vocabulary v;
  v.add_relation("S", 1, Rational{2}, Rational{1});
  MethodChoice closed = MethodChoice::parse("closed:exists_S");
  CHECK(compute_wfomc(f_true(), 3, v, closed) == 26);
}

TEST_CASE("cq method rejects zero-total weights") {
  Vocabulary v;
  v.add_relation("U", 1, Rational{1}, Rational{-1});
  Formula f = parse_formula("exists x. U(x)", v);
  CHECK_THROWS_AS(compute_wfomc(f, 2, v, MethodChoice::parse("cq")), ScopeError);
}
