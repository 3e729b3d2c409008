#pragma once

#include "liftcount/circuit.hpp"
#include "liftcount/numbers.hpp"
#include "liftcount/vocabulary.hpp"

namespace liftcount {

// Per-tuple weights, indexed like the circuit's variables. Symmetric weights
// are the common case; the oracle also accepts fully asymmetric maps.
struct TupleWeighting {
  std::vector<Rational> w;
  std::vector<Rational> wbar;
};

TupleWeighting symmetric_weighting(const GroundCircuit& circuit, const Vocabulary& vocab);

struct WmcOptions {
  unsigned cap = 24;  // maximum number of circuit variables; exceeding is an error
};

// Exact weighted model count, sum over satisfying assignments of
// prod w(true vars) * prod wbar(false vars). Unit propagation and splitting
// into variable-disjoint components keep structured circuits fast; the
// result is the same exact rational either way.
Rational wmc(const GroundCircuit& circuit, const TupleWeighting& weights,
             const WmcOptions& options = {});

// Plain enumeration of all 2^k assignments; reference path for tests.
Rational wmc_enumerate(const GroundCircuit& circuit, const TupleWeighting& weights,
                       const WmcOptions& options = {});

}  // namespace liftcount
