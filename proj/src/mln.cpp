#include "liftcount/mln.hpp"

#include <map>
#include <set>
#include <sstream>

#include "liftcount/errors.hpp"
#include "liftcount/parser.hpp"
#include "liftcount/structure.hpp"

namespace liftcount {

MlnModel parse_mln(std::string_view text) {
  MlnModel model;
  std::map<std::string, unsigned> arities;

  std::istringstream lines{std::string(text)};
  std::string line;
  unsigned line_no = 0;
  std::vector<std::pair<std::string, std::string>> raw;  // (weight, formula)
  while (std::getline(lines, line)) {
    ++line_no;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::size_t sep = line.find("::");
    if (sep == std::string::npos)
      throw ParseError("expected '<weight> :: <formula>'", line_no, 1);
    std::string weight = line.substr(0, sep);
    std::string body = line.substr(sep + 2);
    raw.emplace_back(weight, body);
    for (const auto& [name, arity] : relations_used(parse_formula_unchecked(body))) {
      auto [it, fresh] = arities.emplace(name, arity);
      if (!fresh && it->second != arity)
        throw ParseError("relation '" + name + "' used with two arities", line_no, 1);
    }
  }

  for (const auto& [name, arity] : arities) model.vocab.add_relation(name, arity);
  for (const auto& [weight_text, body] : raw) {
    MlnConstraint c;
    std::string w = weight_text;
    w.erase(0, w.find_first_not_of(" \t"));
    w.erase(w.find_last_not_of(" \t") + 1);
    if (w == "inf") {
      c.hard = true;
    } else {
      c.hard = false;
      c.weight = parse_rational(w);
    }
    c.body = parse_formula(body, model.vocab);
    model.constraints.push_back(std::move(c));
  }
  return model;
}

MlnReduction mln_reduce(const MlnModel& model) {
  MlnReduction out;
  out.vocab = model.vocab;

  std::vector<Formula> hard;
  for (const MlnConstraint& c : model.constraints) {
    std::set<std::string> free = free_variables(c.body);
    std::vector<std::string> vars(free.begin(), free.end());
    if (c.hard) {
      Formula sentence = c.body;
      for (auto it = vars.rbegin(); it != vars.rend(); ++it)
        sentence = f_forall(*it, sentence);
      hard.push_back(sentence);
      continue;
    }
    if (c.weight == 1)
      throw ValidationError(
          "soft constraint with weight 1: the factor 1/(w-1) is undefined, and "
          "a weight-1 constraint multiplies every world by 1; drop it instead");
    std::string name = out.vocab.fresh_name("R");
    out.vocab.add_relation(name, static_cast<unsigned>(vars.size()),
                           Rational{1} / (c.weight - 1), Rational{1});
    out.introduced.push_back({name, "soft constraint carrier, w = 1/(w-1)"});
    Formula sentence = f_or(f_atom(name, vars), c.body);
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      sentence = f_forall(*it, sentence);
    hard.push_back(sentence);
  }
  out.hard_sentence = f_and_all(hard);
  return out;
}

namespace {

// product over soft constraints and satisfied groundings
Rational world_weight(const MlnModel& model, const Structure& world) {
  Rational weight{1};
  unsigned n = world.domain_size();
  for (const MlnConstraint& c : model.constraints) {
    if (c.hard) continue;
    std::set<std::string> free = free_variables(c.body);
    std::vector<std::string> vars(free.begin(), free.end());
    std::map<std::string, unsigned> env;
    std::vector<unsigned> assign(vars.size(), 1);
    if (n == 0 && !vars.empty()) continue;  // no groundings
    bool done = false;
    while (!done) {
      for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]] = assign[i];
      if (evaluate_under(c.body, world, env)) weight *= c.weight;
      done = true;
      for (std::size_t i = vars.size(); i-- > 0;) {
        if (assign[i] < n) {
          ++assign[i];
          for (std::size_t j = i + 1; j < vars.size(); ++j) assign[j] = 1;
          done = false;
          break;
        }
      }
    }
  }
  return weight;
}

Formula universal_closure(const Formula& body) {
  std::set<std::string> free = free_variables(body);
  Formula out = body;
  for (auto it = free.rbegin(); it != free.rend(); ++it) out = f_forall(*it, out);
  return out;
}

}  // namespace

Rational mln_direct(const MlnModel& model, const Formula& query, unsigned n,
                    const WmcOptions& options) {
  if (!is_sentence(query)) throw ValidationError("mln query must be a sentence");

  std::vector<Formula> hard;
  for (const MlnConstraint& c : model.constraints)
    if (c.hard) hard.push_back(universal_closure(c.body));
  Formula gamma = f_and_all(hard);

  Rational numerator{0}, denominator{0};
  for_each_structure(model.vocab, n, options.cap, [&](const Structure& world) {
    if (!evaluate(gamma, world)) return;
    Rational weight = world_weight(model, world);
    denominator += weight;
    if (evaluate(query, world)) numerator += weight;
  });
  if (denominator == 0)
    throw InconsistentMlnError(
        "no world satisfies the hard constraints with nonzero weight");
  return numerator / denominator;
}

Rational mln_query_via_reduction(const MlnModel& model, const Formula& query, unsigned n,
                                 const WfomcEngine& engine) {
  if (!is_sentence(query)) throw ValidationError("mln query must be a sentence");
  MlnReduction reduction = mln_reduce(model);
  Rational denominator = engine(reduction.hard_sentence, n, reduction.vocab);
  if (denominator == 0)
    throw InconsistentMlnError(
        "no world satisfies the hard constraints with nonzero weight");
  Rational numerator = engine(f_and(query, reduction.hard_sentence), n, reduction.vocab);
  return numerator / denominator;
}

}  // namespace liftcount
