#pragma once

#include <string_view>

#include "liftcount/formula.hpp"
#include "liftcount/vocabulary.hpp"

namespace liftcount {

// Grammar (ASCII):
//   formula    := iff
//   iff        := implies { "<->" implies }
//   implies    := or [ "->" implies ]
//   or         := and { "|" and }
//   and        := unary { "&" unary }
//   unary      := "!" unary | quantified | primary
//   quantified := ("forall" | "exists") var {"," var} "." formula
//   primary    := "(" formula ")" | "true" | "false" | atom | var ("=" | "!=") var
//   atom       := Relation [ "(" var {"," var} ")" ]
// Variables are lowercase identifiers, relations start uppercase; "#" starts
// a line comment. Quantifiers extend maximally to the right.
//
// Every relation must be declared in `vocab` with matching arity. Free
// variables are allowed (MLN constraint bodies use them); sentence-hood is
// checked by the operations that require it.
Formula parse_formula(std::string_view text, const Vocabulary& vocab);

// Parses without declaration or arity checks (two-pass loaders use this to
// gather a vocabulary first).
Formula parse_formula_unchecked(std::string_view text);

// Scans the text and builds a vocabulary from the atoms, all weights 1.
// Throws if some relation is used with two different arities.
Vocabulary infer_vocabulary(std::string_view text);

}  // namespace liftcount
