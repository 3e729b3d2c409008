#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "liftcount/formula.hpp"
#include "liftcount/vocabulary.hpp"

namespace liftcount {

// A possible world over domain [1..n]: one bit per ground tuple, stored per
// relation in argument-radix order.
class Structure {
 public:
  Structure(const Vocabulary& vocab, unsigned domain_size);

  unsigned domain_size() const { return n_; }
  std::size_t tuple_count() const { return total_; }

  // args are 1-based domain elements, args.size() == arity.
  bool holds(std::size_t rel_index, const std::vector<unsigned>& args) const;
  void set(std::size_t rel_index, const std::vector<unsigned>& args, bool value);

  // Flat addressing across all relations, used by world enumeration.
  bool bit(std::size_t flat) const { return bits_[flat] != 0; }
  void set_bit(std::size_t flat, bool value) { bits_[flat] = value; }
  std::size_t flat_index(std::size_t rel_index, const std::vector<unsigned>& args) const;

  const Vocabulary& vocab() const { return *vocab_; }

 private:
  const Vocabulary* vocab_;
  unsigned n_;
  std::vector<std::size_t> offset_;  // per relation
  std::size_t total_;
  std::vector<char> bits_;
};

// Tarskian truth over the finite structure. Throws ValidationError on free
// variables or symbols missing from the structure's vocabulary.
bool evaluate(const Formula& sentence, const Structure& world);

// Truth of a formula whose free variables are bound by `env` (1-based domain
// elements).
bool evaluate_under(const Formula& f, const Structure& world,
                    const std::map<std::string, unsigned>& env);

// Calls fn for every structure over the vocabulary at the given domain size
// (2^|Tup(n)| of them). Throws ResourceCapError when |Tup(n)| > cap_bits.
void for_each_structure(const Vocabulary& vocab, unsigned n, unsigned cap_bits,
                        const std::function<void(const Structure&)>& fn);

// Relabels domain elements: element i becomes perm[i-1] (a permutation of 1..n).
Structure permute_structure(const Structure& world, const std::vector<unsigned>& perm);

}  // namespace liftcount
