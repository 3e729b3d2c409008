#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "liftcount/analyze.hpp"
#include "liftcount/cq.hpp"
#include "liftcount/corpus.hpp"
#include "liftcount/engine.hpp"
#include "liftcount/errors.hpp"
#include "liftcount/mln.hpp"
#include "liftcount/oracle.hpp"
#include "liftcount/parser.hpp"
#include "liftcount/transforms.hpp"

using namespace liftcount;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Vocabulary vocab_for(const std::string& weights_path, const std::string& formula_text) {
  if (!weights_path.empty()) return parse_weights_json(read_file(weights_path));
  return infer_vocabulary(formula_text);
}

std::map<std::string, std::int64_t> parse_domains(const std::string& spec) {
  std::map<std::string, std::int64_t> out;
  if (spec.empty()) return out;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw ValidationError("bad --domains entry '" + item + "', expected var=N");
    out[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
  }
  return out;
}

unsigned default_cap() {
  if (const char* env = std::getenv("LIFTCOUNT_CAP")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 24;
}

void print_value(const Rational& value, int decimal) {
  std::cout << render_rational(value) << "\n";
  if (decimal >= 0) std::cout << decimal_string(value, static_cast<unsigned>(decimal)) << "\n";
}

// Generalized per-variable-domain WFOMC through the CQ engine.
Rational wfomc_with_domains(const Formula& f, unsigned n, const Vocabulary& vocab,
                            const std::map<std::string, std::int64_t>& domains) {
  std::map<std::string, Rational> probabilities;
  for (const auto& [name, arity] : relations_used(f)) {
    (void)arity;
    Rational total = vocab.weight(name) + vocab.cweight(name);
    if (total == 0)
      throw ScopeError("relation '" + name + "' has w + wbar = 0");
    probabilities[name] = vocab.weight(name) / total;
  }
  QueryHypergraph graph = QueryHypergraph::from_formula(f, n, domains, probabilities);
  Rational value = cq_probability(graph);
  for (const QueryEdge& e : graph.edges()) {
    Integer tuples{1};
    for (std::size_t v : e.vars) tuples *= graph.variables()[v].domain;
    value *= rat_pow(vocab.weight(e.relation) + vocab.cweight(e.relation),
                     tuples.convert_to<std::int64_t>());
  }
  return value;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"liftcount: exact symmetric weighted first-order model counting"};
  app.require_subcommand(1);

  std::string formula_path, weights_path, mln_path, query_path, method_name = "auto";
  std::string domains_spec, methods_list = "fo2,brute", corpus_dir, transform_kind;
  unsigned n = 0, max_n = 4;
  int decimal = -1;
  unsigned cap = default_cap();
  bool have_n = false;

  auto add_common = [&](CLI::App* cmd, bool needs_n) {
    cmd->add_option("-f,--formula", formula_path, "formula file")->required();
    if (needs_n)
      cmd->add_option("-n", n, "domain size")->required()->each([&](const std::string&) {
        have_n = true;
      });
    cmd->add_option("--cap", cap, "ground enumeration cap (variables)");
    cmd->add_option("--decimal", decimal, "also print a decimal approximation");
  };

  CLI::App* wfomc_cmd = app.add_subcommand("wfomc", "weighted first-order model count");
  add_common(wfomc_cmd, true);
  wfomc_cmd->add_option("-w,--weights", weights_path, "weights JSON file")->required();
  wfomc_cmd->add_option("--method", method_name, "auto|brute|lineage|fo2|cq|qs4|closed:<name>");
  wfomc_cmd->add_option("--domains", domains_spec, "per-variable domain sizes, e.g. x=3,y=5");

  CLI::App* fomc_cmd = app.add_subcommand("fomc", "first-order model count (all weights 1)");
  add_common(fomc_cmd, true);
  fomc_cmd->add_option("-w,--weights", weights_path, "optional weights JSON (names/arities)");
  fomc_cmd->add_option("--method", method_name, "method choice");

  CLI::App* transform_cmd = app.add_subcommand("transform", "apply a WFOMC-preserving rewrite");
  add_common(transform_cmd, false);
  transform_cmd->add_option("-w,--weights", weights_path, "weights JSON file");
  transform_cmd->add_flag_callback("--skolemize", [&] { transform_kind = "skolemize"; });
  transform_cmd->add_flag_callback("--remove-negation", [&] { transform_kind = "remove-negation"; });
  transform_cmd->add_flag_callback("--remove-equality", [&] { transform_kind = "remove-equality"; });
  transform_cmd->add_flag_callback("--scott", [&] { transform_kind = "scott"; });
  transform_cmd->add_flag_callback("--reduce-arity", [&] { transform_kind = "reduce-arity"; });

  CLI::App* mln_cmd = app.add_subcommand("mln", "Markov logic network query probability");
  mln_cmd->add_option("-m,--mln", mln_path, "MLN file")->required();
  mln_cmd->add_option("-q,--query", query_path, "query sentence file")->required();
  mln_cmd->add_option("-n", n, "domain size")->required();
  mln_cmd->add_option("--method", method_name, "direct|reduction");
  mln_cmd->add_option("--cap", cap, "ground enumeration cap");
  mln_cmd->add_option("--decimal", decimal, "also print a decimal approximation");

  CLI::App* gamma_cmd = app.add_subcommand("gamma-check", "gamma-acyclicity of a CQ");
  gamma_cmd->add_option("-q,--query", query_path, "conjunctive query file")->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "cross-check methods over a sweep of n");
  verify_cmd->add_option("-f,--formula", formula_path, "formula file")->required();
  verify_cmd->add_option("-w,--weights", weights_path, "weights JSON file");
  verify_cmd->add_option("--max-n", max_n, "sweep n = 0..max-n");
  verify_cmd->add_option("--methods", methods_list, "comma-separated method list");
  verify_cmd->add_option("--cap", cap, "ground enumeration cap");

  CLI::App* corpus_cmd = app.add_subcommand("corpus", "list the bundled benchmark corpus");
  corpus_cmd->add_option("--dir", corpus_dir, "load formulas from a directory instead");
  corpus_cmd->add_option("-n", n, "also print the oracle count at this domain size")
      ->each([&](const std::string&) { have_n = true; });
  corpus_cmd->add_option("--cap", cap, "ground enumeration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  EngineOptions options;
  options.wmc.cap = cap;

  if (wfomc_cmd->parsed() || fomc_cmd->parsed()) {
    std::string text = read_file(formula_path);
    Vocabulary vocab = vocab_for(weights_path, text);
    if (fomc_cmd->parsed()) {
      Vocabulary unit;
      for (const RelationSymbol& s : vocab.symbols()) unit.add_relation(s.name, s.arity);
      vocab = unit;
    }
    Formula f = parse_formula(text, vocab);
    std::map<std::string, std::int64_t> domains = parse_domains(domains_spec);
    Rational value;
    if (!domains.empty())
      value = wfomc_with_domains(f, n, vocab, domains);
    else
      value = compute_wfomc(f, n, vocab, MethodChoice::parse(method_name), options);
    print_value(value, decimal);
    return 0;
  }

  if (transform_cmd->parsed()) {
    if (transform_kind.empty())
      throw ValidationError("pick one of --skolemize --remove-negation --remove-equality "
                            "--scott --reduce-arity");
    std::string text = read_file(formula_path);
    Vocabulary vocab = vocab_for(weights_path, text);
    Formula f = parse_formula(text, vocab);
    TransformResult result;
    if (transform_kind == "skolemize") result = skolemize(f, vocab);
    else if (transform_kind == "remove-negation") result = remove_negation(f, vocab);
    else if (transform_kind == "remove-equality") result = remove_equality(f, vocab);
    else if (transform_kind == "scott") result = scott_reduce(f, vocab);
    else result = reduce_arity(f, vocab);
    std::cout << render(result.formula) << "\n";
    std::cout << render_weights_json(result.vocab) << "\n";
    for (const auto& sym : result.introduced)
      std::cout << "# " << sym.name << ": " << sym.role << "\n";
    if (!result.multiplier.empty())
      std::cout << "# multiplier at n=2: " << render_rational(result.multiplier_at(2))
                << "\n";
    return 0;
  }

  if (mln_cmd->parsed()) {
    MlnModel model = parse_mln(read_file(mln_path));
    Formula query = parse_formula(read_file(query_path), model.vocab);
    Rational value;
    if (method_name == "direct" || method_name == "auto") {
      value = mln_direct(model, query, n, options.wmc);
    } else if (method_name == "reduction") {
      value = mln_query_via_reduction(
          model, query, n, [&](const Formula& g, unsigned m, const Vocabulary& v) {
            return brute_wfomc(g, m, v, options.wmc);
          });
    } else {
      throw ValidationError("mln --method must be direct or reduction");
    }
    print_value(value, decimal);
    return 0;
  }

  if (gamma_cmd->parsed()) {
    std::string text = read_file(query_path);
    Vocabulary vocab = infer_vocabulary(text);
    Formula f = parse_formula(text, vocab);
    QueryHypergraph graph = QueryHypergraph::from_formula(f, 1, {}, {});
    GammaResult result = gamma_reduce(graph);
    if (result.gamma_acyclic) {
      std::cout << "gamma-acyclic\n";
      for (const CqStep& step : result.trace) {
        const char* rule = step.rule == CqRule::EmptyEdge ? "(c) empty edge"
                           : step.rule == CqRule::IdenticalEdges ? "(d) identical edges"
                           : step.rule == CqRule::EdgeEquivalentNodes
                               ? "(e) edge-equivalent nodes"
                           : step.rule == CqRule::IsolatedNode ? "(a) isolated node"
                                                               : "(b) singleton edge";
        std::cout << "  " << rule << ": " << step.detail << "\n";
      }
    } else {
      std::cout << "not gamma-acyclic\n";
      std::cout << "  stalled at: " << result.stalled << "\n";
    }
    return 0;
  }

  if (verify_cmd->parsed()) {
    std::string text = read_file(formula_path);
    Vocabulary vocab = vocab_for(weights_path, text);
    Formula f = parse_formula(text, vocab);
    std::vector<MethodChoice> methods;
    std::istringstream in(methods_list);
    std::string item;
    while (std::getline(in, item, ',')) methods.push_back(MethodChoice::parse(item));
    if (methods.empty()) throw ValidationError("empty --methods list");

    bool mismatch = false;
    for (unsigned i = 0; i <= max_n; ++i) {
      std::cout << "n=" << i;
      Rational first;
      bool ok = true;
      for (std::size_t m = 0; m < methods.size(); ++m) {
        Rational value = compute_wfomc(f, i, vocab, methods[m], options);
        std::cout << "  " << methods[m].name() << "=" << render_rational(value);
        if (m == 0) first = value;
        else if (value != first) ok = false;
      }
      std::cout << (ok ? "  ok" : "  MISMATCH") << "\n";
      if (!ok) mismatch = true;
    }
    if (mismatch) {
      std::cerr << "verification mismatch\n";
      return 5;
    }
    return 0;
  }

  if (corpus_cmd->parsed()) {
    std::vector<CorpusEntry> entries =
        corpus_dir.empty() ? benchmark_corpus() : load_corpus_dir(corpus_dir);
    for (const CorpusEntry& entry : entries) {
      std::cout << entry.name << ": " << render(entry.formula);
      if (have_n)
        std::cout << "  count(n=" << n
                  << ") = " << count_models(entry.formula, n, entry.vocab, options.wmc).str();
      std::cout << "\n";
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const ResourceCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const ScopeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InconsistentMlnError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
