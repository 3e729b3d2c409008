#pragma once

#include <string>
#include <string_view>

#include "liftcount/fo2.hpp"
#include "liftcount/formula.hpp"
#include "liftcount/numbers.hpp"
#include "liftcount/vocabulary.hpp"
#include "liftcount/wmc.hpp"

namespace liftcount {

// Method names: auto, brute (structure enumeration), lineage (lineage + WMC),
// fo2, cq, qs4, closed:<name>.
struct MethodChoice {
  enum class Kind { Auto, Brute, Lineage, Fo2, Cq, Qs4, Closed };
  Kind kind = Kind::Auto;
  std::string closed_name;

  static MethodChoice parse(std::string_view text);
  std::string name() const;
};

struct EngineOptions {
  WmcOptions wmc;
  EngineLimits fo2;
};

// Deterministic auto-routing: syntactic Q_S4 match, then a self-join-free CQ
// the gamma rules (or a separator) fully reduce, then FO2, then the lineage
// oracle within the enumeration cap. Routing never changes the value.
MethodChoice::Kind route(const Formula& sentence, const Vocabulary& vocab, unsigned n,
                         const EngineOptions& options);

Rational compute_wfomc(const Formula& sentence, unsigned n, const Vocabulary& vocab,
                       const MethodChoice& method, const EngineOptions& options = {});

}  // namespace liftcount
