#pragma once

#include <string>
#include <vector>

#include "liftcount/formula.hpp"
#include "liftcount/vocabulary.hpp"

namespace liftcount {

struct CorpusEntry {
  std::string name;
  std::string text;
  Formula formula;
  Vocabulary vocab;  // inferred, unit weights
};

// The bundled benchmark sentences (triangle and cycle queries, transitivity,
// homophily, the simplified extension axiom); evaluated only by the ground
// oracle at small n. The k-cycle template ships instantiated at k = 3, 4, 5.
std::vector<CorpusEntry> benchmark_corpus();

// Loads *.fol files from a directory; used by the CLI corpus subcommand. The
// shipped data/corpus files parse to the same formulas as benchmark_corpus().
std::vector<CorpusEntry> load_corpus_dir(const std::string& path);

}  // namespace liftcount
