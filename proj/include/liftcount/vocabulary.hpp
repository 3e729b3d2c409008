#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "liftcount/numbers.hpp"

namespace liftcount {

struct RelationSymbol {
  std::string name;
  unsigned arity = 0;
};

// A relational vocabulary with one exact weight pair (w, wbar) per symbol.
// Weights may be negative or zero. Names are unique; relation names start
// with an uppercase letter.
class Vocabulary {
 public:
  Vocabulary() = default;

  void add_relation(const std::string& name, unsigned arity, Rational w = 1,
                    Rational wbar = 1);

  bool has(const std::string& name) const;
  unsigned arity_of(const std::string& name) const;
  std::size_t index_of(const std::string& name) const;
  const Rational& weight(const std::string& name) const;
  const Rational& cweight(const std::string& name) const;  // wbar
  void set_weights(const std::string& name, Rational w, Rational wbar);

  const std::vector<RelationSymbol>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }

  const RelationSymbol& symbol(std::size_t i) const { return symbols_[i]; }
  const Rational& weight_at(std::size_t i) const { return w_[i]; }
  const Rational& cweight_at(std::size_t i) const { return wbar_[i]; }

  // True when `other` contains every symbol of *this with identical arity and
  // weights.
  bool extended_by(const Vocabulary& other) const;

  // Picks a relation name not yet present; `stem` + smallest positive index.
  std::string fresh_name(const std::string& stem) const;

 private:
  std::vector<RelationSymbol> symbols_;
  std::vector<Rational> w_, wbar_;
};

// Weights file: {"relations":[{"name":"R","arity":2,"w":"1","wbar":"-1"},...]}
// with weights as Rational strings.
Vocabulary parse_weights_json(std::string_view text);
std::string render_weights_json(const Vocabulary& vocab);

}  // namespace liftcount
