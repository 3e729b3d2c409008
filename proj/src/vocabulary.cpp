#include "liftcount/vocabulary.hpp"

#include <json.hpp>

#include "liftcount/errors.hpp"

namespace liftcount {

void Vocabulary::add_relation(const std::string& name, unsigned arity, Rational w,
                              Rational wbar) {
  if (name.empty() || !std::isupper(static_cast<unsigned char>(name[0])))
    throw ValidationError("relation name must start uppercase: '" + name + "'");
  if (has(name)) throw ValidationError("duplicate relation '" + name + "'");
  symbols_.push_back({name, arity});
  w_.push_back(std::move(w));
  wbar_.push_back(std::move(wbar));
}

bool Vocabulary::has(const std::string& name) const {
  for (const auto& s : symbols_)
    if (s.name == name) return true;
  return false;
}

std::size_t Vocabulary::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name == name) return i;
  throw ValidationError("undeclared relation '" + name + "'");
}

unsigned Vocabulary::arity_of(const std::string& name) const {
  return symbols_[index_of(name)].arity;
}

const Rational& Vocabulary::weight(const std::string& name) const {
  return w_[index_of(name)];
}

const Rational& Vocabulary::cweight(const std::string& name) const {
  return wbar_[index_of(name)];
}

void Vocabulary::set_weights(const std::string& name, Rational w, Rational wbar) {
  std::size_t i = index_of(name);
  w_[i] = std::move(w);
  wbar_[i] = std::move(wbar);
}

bool Vocabulary::extended_by(const Vocabulary& other) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (!other.has(symbols_[i].name)) return false;
    std::size_t j = other.index_of(symbols_[i].name);
    if (other.symbols_[j].arity != symbols_[i].arity) return false;
    if (other.w_[j] != w_[i] || other.wbar_[j] != wbar_[i]) return false;
  }
  return true;
}

std::string Vocabulary::fresh_name(const std::string& stem) const {
  for (unsigned i = 1;; ++i) {
    std::string candidate = stem + std::to_string(i);
    if (!has(candidate)) return candidate;
  }
}

Vocabulary parse_weights_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("weights file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("relations") || !doc["relations"].is_array())
    throw ValidationError("weights file: expected {\"relations\": [...]}");
  Vocabulary vocab;
  for (const auto& r : doc["relations"]) {
    if (!r.contains("name") || !r.contains("arity"))
      throw ValidationError("weights file: relation entries need name and arity");
    std::string name = r["name"].get<std::string>();
    unsigned arity = r["arity"].get<unsigned>();
    Rational w = r.contains("w") ? parse_rational(r["w"].get<std::string>()) : Rational{1};
    Rational wbar =
        r.contains("wbar") ? parse_rational(r["wbar"].get<std::string>()) : Rational{1};
    vocab.add_relation(name, arity, std::move(w), std::move(wbar));
  }
  return vocab;
}

std::string render_weights_json(const Vocabulary& vocab) {
  nlohmann::json relations = nlohmann::json::array();
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    relations.push_back({{"name", vocab.symbol(i).name},
                         {"arity", vocab.symbol(i).arity},
                         {"w", render_rational(vocab.weight_at(i))},
                         {"wbar", render_rational(vocab.cweight_at(i))}});
  }
  return nlohmann::json{{"relations", relations}}.dump(2);
}

}  // namespace liftcount
