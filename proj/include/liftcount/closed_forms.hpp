#pragma once

#include <string_view>

#include "liftcount/numbers.hpp"
#include "liftcount/vocabulary.hpp"

namespace liftcount {

// Closed-form evaluators used as independent oracles:
//   exists_S         (w+wbar)^n - wbar^n            for exists y. S(y)
//   forall_exists_R  ((w+wbar)^n - wbar^n)^n        for forall x. exists y. R(x,y)
//   table1_fomc      sum_{k,m} C(n,k) C(n,m) 2^(n^2-km)
//   table1_wfomc     sum_{k,m} C(n,k) C(n,m) W_{k,m}
// for forall x,y. R(x) | S(x,y) | T(y). Weights are read from the vocabulary
// by relation name (S regarding exists_S, R for forall_exists_R, R/S/T for
// the weighted table sum). Unknown names are rejected.
Rational closed_form(std::string_view name, unsigned n, const Vocabulary& weights);

}  // namespace liftcount
