#pragma once

#include <string>
#include <vector>

#include "liftcount/formula.hpp"
#include "liftcount/numbers.hpp"
#include "liftcount/transforms.hpp"
#include "liftcount/vocabulary.hpp"

namespace liftcount {

struct EngineLimits {
  unsigned cell_cap = 4096;      // maximum number of cells 2^(symbol count)
  unsigned pair_bits_cap = 22;   // maximum number of two-element ground atoms
};

// Cell parameters of a quantifier-free two-variable matrix psi over symbols
// of arity <= 2. Cells are full 1-types: one truth value per unary atom U(x)
// and per diagonal atom R(x,x), for every non-nullary vocabulary symbol.
struct CellParameters {
  std::vector<std::string> one_atoms;      // display names, e.g. "R(x,x)"
  std::vector<std::vector<bool>> cells;    // cell -> truth per one-atom
  std::vector<Rational> t;                 // single-element weight per cell
  std::vector<Rational> s;                 // within-cell unordered-pair weight
  std::vector<std::vector<Rational>> r;    // cross-cell pair weight, symmetric
};

CellParameters cell_parameters(const Formula& psi, const Vocabulary& vocab,
                               const EngineLimits& limits = {});

// The polynomial-time symmetric WFOMC engine for FO2 sentences. Building the
// evaluator runs the whole pipeline once; the cell parameters are independent
// of n, so a built engine evaluates any domain size cheaply. Sentences using
// equality are routed through the coefficient-extraction recipe.
class Fo2Engine {
 public:
  static Fo2Engine build(const Formula& sentence, const Vocabulary& vocab,
                         const EngineLimits& limits = {});

  Rational evaluate(unsigned n) const;

  // Introspection for tests: per-Shannon-branch multipliers and cell counts.
  std::size_t branch_count() const;
  std::size_t branch_cell_count(std::size_t branch) const;

  struct Impl;
  std::shared_ptr<const Impl> impl;
};

Rational wfomc_fo2(const Formula& sentence, unsigned n, const Vocabulary& vocab,
                   const EngineLimits& limits = {});

}  // namespace liftcount
