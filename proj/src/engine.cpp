#include "liftcount/engine.hpp"

#include <map>

#include "liftcount/analyze.hpp"
#include "liftcount/cq.hpp"
#include "liftcount/closed_forms.hpp"
#include "liftcount/errors.hpp"
#include "liftcount/oracle.hpp"
#include "liftcount/qs4.hpp"

namespace liftcount {

MethodChoice MethodChoice::parse(std::string_view text) {
  MethodChoice m;
  if (text == "auto") m.kind = Kind::Auto;
  else if (text == "brute") m.kind = Kind::Brute;
  else if (text == "lineage") m.kind = Kind::Lineage;
  else if (text == "fo2") m.kind = Kind::Fo2;
  else if (text == "cq") m.kind = Kind::Cq;
  else if (text == "qs4") m.kind = Kind::Qs4;
  else if (text.substr(0, 7) == "closed:") {
    m.kind = Kind::Closed;
    m.closed_name = std::string(text.substr(7));
  } else {
    throw ValidationError("unknown method '" + std::string(text) + "'");
  }
  return m;
}

std::string MethodChoice::name() const {
  switch (kind) {
    case Kind::Auto: return "auto";
    case Kind::Brute: return "brute";
    case Kind::Lineage: return "lineage";
    case Kind::Fo2: return "fo2";
    case Kind::Cq: return "cq";
    case Kind::Qs4: return "qs4";
    case Kind::Closed: return "closed:" + closed_name;
  }
  return "?";
}

namespace {

// WFOMC through the CQ engine: convert weights to tuple probabilities and
// scale back by the weight of the unconstrained space.
Rational wfomc_via_cq(const Formula& sentence, unsigned n, const Vocabulary& vocab) {
  std::map<std::string, Rational> probabilities;
  std::map<std::string, unsigned> used = relations_used(sentence);
  for (const auto& [name, arity] : used) {
    (void)arity;
    Rational total = vocab.weight(name) + vocab.cweight(name);
    if (total == 0)
      throw ScopeError("relation '" + name +
                       "' has w + wbar = 0; probabilities are undefined");
    probabilities[name] = vocab.weight(name) / total;
  }
  QueryHypergraph graph =
      QueryHypergraph::from_formula(sentence, n, {}, probabilities);
  Rational pr = cq_probability(graph);

  Rational scale{1};
  for (const RelationSymbol& s : vocab.symbols()) {
    Rational total = vocab.weight(s.name) + vocab.cweight(s.name);
    Integer tuples = int_pow(Integer{n}, s.arity);
    if (tuples == 0) continue;
    if (total == 0) {
      if (used.count(s.name))
        throw ScopeError("relation '" + s.name + "' has w + wbar = 0");
      return Rational{0};  // unconstrained zero-sum relation
    }
    scale *= rat_pow(total, tuples.convert_to<std::int64_t>());
  }
  return pr * scale;
}

Rational wfomc_via_qs4(const Formula& sentence, unsigned n, const Vocabulary& vocab) {
  if (!matches_qs4(sentence))
    throw ScopeError("formula is not the four-variable S-clause");
  std::map<std::string, unsigned> used = relations_used(sentence);
  const std::string& rel = used.begin()->first;
  Rational value = wfomc_qs4(n, vocab.weight(rel), vocab.cweight(rel));
  // other vocabulary symbols are unconstrained
  for (const RelationSymbol& s : vocab.symbols()) {
    if (s.name == rel) continue;
    Integer tuples = int_pow(Integer{n}, s.arity);
    if (tuples == 0) continue;
    Rational total = vocab.weight(s.name) + vocab.cweight(s.name);
    if (total == 0) return Rational{0};
    value *= rat_pow(total, tuples.convert_to<std::int64_t>());
  }
  return value;
}

}  // namespace

MethodChoice::Kind route(const Formula& sentence, const Vocabulary& vocab, unsigned n,
                         const EngineOptions& options) {
  FormulaClass cls = analyze(sentence);
  if (cls.qs4) return MethodChoice::Kind::Qs4;
  if (cls.cq_without_self_joins) {
    try {
      wfomc_via_cq(sentence, n, vocab);
      return MethodChoice::Kind::Cq;
    } catch (const ScopeError&) {
      // fall through
    } catch (const ValidationError&) {
      // repeated variables in an atom etc.: the CQ engine cannot represent it
    }
  }
  if (cls.fo2) return MethodChoice::Kind::Fo2;
  GroundCircuit circuit = lineage(sentence, n, vocab);
  if (circuit.variable_count() <= options.wmc.cap) return MethodChoice::Kind::Lineage;
  throw ScopeError(
      "no method applies: not Q_S4, not a reducible CQ, not FO2, and the "
      "lineage exceeds the enumeration cap");
}

Rational compute_wfomc(const Formula& sentence, unsigned n, const Vocabulary& vocab,
                       const MethodChoice& method, const EngineOptions& options) {
  switch (method.kind) {
    case MethodChoice::Kind::Auto: {
      MethodChoice chosen;
      chosen.kind = route(sentence, vocab, n, options);
      return compute_wfomc(sentence, n, vocab, chosen, options);
    }
    case MethodChoice::Kind::Brute:
      return direct_wfomc(sentence, n, vocab, options.wmc);
    case MethodChoice::Kind::Lineage:
      return brute_wfomc(sentence, n, vocab, options.wmc);
    case MethodChoice::Kind::Fo2:
      return wfomc_fo2(sentence, n, vocab, options.fo2);
    case MethodChoice::Kind::Cq:
      return wfomc_via_cq(sentence, n, vocab);
    case MethodChoice::Kind::Qs4:
      return wfomc_via_qs4(sentence, n, vocab);
    case MethodChoice::Kind::Closed:
      return closed_form(method.closed_name, n, vocab);
  }
  throw ValidationError("unreachable method kind");
}

}  // namespace liftcount
