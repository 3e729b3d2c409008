#include "liftcount/oracle.hpp"

#include "liftcount/errors.hpp"

namespace liftcount {

Rational brute_wfomc(const Formula& sentence, unsigned n, const Vocabulary& vocab,
                     const WmcOptions& options) {
  GroundCircuit circuit = lineage(sentence, n, vocab);
  Rational counted = wmc(circuit, symmetric_weighting(circuit, vocab), options);

  // Ground tuples the lineage never mentions are free: each contributes a
  // factor w + wbar.
  std::vector<Integer> mentioned(vocab.size(), Integer{0});
  for (const GroundAtom& atom : circuit.variables()) ++mentioned[atom.rel];
  for (std::size_t r = 0; r < vocab.size(); ++r) {
    Integer free_tuples = int_pow(Integer{n}, vocab.symbol(r).arity) - mentioned[r];
    if (free_tuples == 0) continue;
    Rational base = vocab.weight_at(r) + vocab.cweight_at(r);
    if (base == 0) return Rational{0};
    counted *= rat_pow(base, free_tuples.convert_to<std::int64_t>());
  }
  return counted;
}

Rational direct_wfomc(const Formula& sentence, unsigned n, const Vocabulary& vocab,
                      const WmcOptions& options) {
  if (!is_sentence(sentence))
    throw ValidationError("direct_wfomc: formula has free variables");
  Rational total{0};
  for_each_structure(vocab, n, options.cap, [&](const Structure& world) {
    if (!evaluate(sentence, world)) return;
    Rational weight{1};
    for (std::size_t r = 0; r < vocab.size(); ++r) {
      unsigned arity = vocab.symbol(r).arity;
      std::size_t count = 1;
      for (unsigned i = 0; i < arity; ++i) count *= n;
      std::size_t present = 0;
      for (std::size_t t = 0; t < count; ++t)
        if (world.bit(world.flat_index(r, {}) + t)) ++present;
      weight *= rat_pow(vocab.weight_at(r), static_cast<std::int64_t>(present)) *
                rat_pow(vocab.cweight_at(r), static_cast<std::int64_t>(count - present));
    }
    total += weight;
  });
  return total;
}

Integer count_models(const Formula& sentence, unsigned n, const Vocabulary& vocab,
                     const WmcOptions& options) {
  Vocabulary unit;
  for (const RelationSymbol& s : vocab.symbols()) unit.add_relation(s.name, s.arity);
  Rational r = brute_wfomc(sentence, n, unit, options);
  return numerator_of(r);
}

Integer count_models_direct(const Formula& sentence, unsigned n, const Vocabulary& vocab,
                            const WmcOptions& options) {
  if (!is_sentence(sentence))
    throw ValidationError("count_models_direct: formula has free variables");
  Integer total{0};
  for_each_structure(vocab, n, options.cap, [&](const Structure& world) {
    if (evaluate(sentence, world)) ++total;
  });
  return total;
}

}  // namespace liftcount
