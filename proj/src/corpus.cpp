#include "liftcount/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "liftcount/errors.hpp"
#include "liftcount/parser.hpp"

namespace liftcount {

namespace {

constexpr const char* kCorpus[][2] = {
    {"untyped_triangles", "exists x, y, z. R(x,y) & R(y,z) & R(z,x)"},
    {"typed_triangles", "exists x, y, z. R(x,y) & S(y,z) & T(z,x)"},
    {"cycle3", "exists x1, x2, x3. R1(x1,x2) & R2(x2,x3) & R3(x3,x1)"},
    {"cycle4", "exists x1, x2, x3, x4. R1(x1,x2) & R2(x2,x3) & R3(x3,x4) & R4(x4,x1)"},
    {"cycle5",
     "exists x1, x2, x3, x4, x5. "
     "R1(x1,x2) & R2(x2,x3) & R3(x3,x4) & R4(x4,x5) & R5(x5,x1)"},
    {"transitivity", "forall x, y, z. E(x,y) & E(y,z) -> E(x,z)"},
    {"homophily", "forall x, y, z. R(x,y) & S(x,z) -> R(z,y)"},
    {"extension_axiom",
     "forall x1, x2, x3. x1 != x2 & x1 != x3 & x2 != x3 -> "
     "(exists y. E(x1,y) & E(x2,y) & E(x3,y))"},
};

CorpusEntry make_entry(std::string name, std::string text) {
  CorpusEntry entry;
  entry.name = std::move(name);
  entry.text = std::move(text);
  entry.vocab = infer_vocabulary(entry.text);
  entry.formula = parse_formula(entry.text, entry.vocab);
  return entry;
}

}  // namespace

std::vector<CorpusEntry> benchmark_corpus() {
  std::vector<CorpusEntry> out;
  for (const auto& [name, text] : kCorpus) out.push_back(make_entry(name, text));
  return out;
}

std::vector<CorpusEntry> load_corpus_dir(const std::string& path) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(path))
    throw ValidationError("corpus directory not found: " + path);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(path))
    if (entry.path().extension() == ".fol") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<CorpusEntry> out;
  for (const auto& file : files) {
    std::ifstream in(file);
    std::ostringstream text;
    text << in.rdbuf();
    out.push_back(make_entry(file.stem().string(), text.str()));
  }
  return out;
}

}  // namespace liftcount
