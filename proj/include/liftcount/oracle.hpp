#pragma once

#include "liftcount/circuit.hpp"
#include "liftcount/formula.hpp"
#include "liftcount/numbers.hpp"
#include "liftcount/structure.hpp"
#include "liftcount/vocabulary.hpp"
#include "liftcount/wmc.hpp"

namespace liftcount {

// WFOMC(Phi, n, w, wbar) = WMC(lineage(Phi, n), symmetric weights).
Rational brute_wfomc(const Formula& sentence, unsigned n, const Vocabulary& vocab,
                     const WmcOptions& options = {});

// Independent route: enumerates all 2^|Tup(n)| structures and sums the weight
// of the satisfying ones directly.
Rational direct_wfomc(const Formula& sentence, unsigned n, const Vocabulary& vocab,
                      const WmcOptions& options = {});

// FOMC = WFOMC with all weights 1, via the lineage route.
Integer count_models(const Formula& sentence, unsigned n, const Vocabulary& vocab,
                     const WmcOptions& options = {});

// FOMC by direct structure enumeration with `evaluate`; the two routes must
// agree on everything small enough to run both.
Integer count_models_direct(const Formula& sentence, unsigned n, const Vocabulary& vocab,
                            const WmcOptions& options = {});

}  // namespace liftcount
