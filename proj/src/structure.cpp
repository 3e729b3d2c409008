#include "liftcount/structure.hpp"

#include <map>
#include <optional>

#include "liftcount/errors.hpp"

namespace liftcount {

namespace {

std::size_t pow_size(unsigned n, unsigned arity) {
  std::size_t r = 1;
  for (unsigned i = 0; i < arity; ++i) r *= n;
  return r;  // n^0 = 1: a nullary relation has one tuple even when n = 0
}

}  // namespace

Structure::Structure(const Vocabulary& vocab, unsigned domain_size)
    : vocab_(&vocab), n_(domain_size) {
  total_ = 0;
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    offset_.push_back(total_);
    total_ += pow_size(n_, vocab.symbol(i).arity);
  }
  bits_.assign(total_, 0);
}

std::size_t Structure::flat_index(std::size_t rel_index,
                                  const std::vector<unsigned>& args) const {
  std::size_t idx = 0;
  for (unsigned a : args) idx = idx * n_ + (a - 1);
  return offset_[rel_index] + idx;
}

bool Structure::holds(std::size_t rel_index, const std::vector<unsigned>& args) const {
  return bits_[flat_index(rel_index, args)] != 0;
}

void Structure::set(std::size_t rel_index, const std::vector<unsigned>& args, bool value) {
  bits_[flat_index(rel_index, args)] = value;
}

namespace {

struct EvalContext {
  const Structure* world;
  std::map<std::string, unsigned> env;
};

bool eval_rec(const Formula& f, EvalContext& ctx) {
  switch (f->kind) {
    case FormulaKind::Atom: {
      const Vocabulary& vocab = ctx.world->vocab();
      std::size_t rel = vocab.index_of(f->relation);
      if (vocab.symbol(rel).arity != f->args.size())
        throw ValidationError("arity mismatch on '" + f->relation + "'");
      std::vector<unsigned> args;
      args.reserve(f->args.size());
      for (const auto& v : f->args) {
        auto it = ctx.env.find(v);
        if (it == ctx.env.end()) throw ValidationError("free variable '" + v + "'");
        args.push_back(it->second);
      }
      return ctx.world->holds(rel, args);
    }
    case FormulaKind::Equal: {
      auto a = ctx.env.find(f->args[0]);
      auto b = ctx.env.find(f->args[1]);
      if (a == ctx.env.end() || b == ctx.env.end())
        throw ValidationError("free variable in equality");
      return a->second == b->second;
    }
    case FormulaKind::True:
      return true;
    case FormulaKind::False:
      return false;
    case FormulaKind::Not:
      return !eval_rec(f->left, ctx);
    case FormulaKind::And:
      return eval_rec(f->left, ctx) && eval_rec(f->right, ctx);
    case FormulaKind::Or:
      return eval_rec(f->left, ctx) || eval_rec(f->right, ctx);
    case FormulaKind::Implies:
      return !eval_rec(f->left, ctx) || eval_rec(f->right, ctx);
    case FormulaKind::Iff:
      return eval_rec(f->left, ctx) == eval_rec(f->right, ctx);
    case FormulaKind::Forall: {
      auto saved = ctx.env.find(f->var) != ctx.env.end()
                       ? std::optional<unsigned>(ctx.env[f->var])
                       : std::nullopt;
      for (unsigned a = 1; a <= ctx.world->domain_size(); ++a) {
        ctx.env[f->var] = a;
        if (!eval_rec(f->left, ctx)) {
          if (saved) ctx.env[f->var] = *saved; else ctx.env.erase(f->var);
          return false;
        }
      }
      if (saved) ctx.env[f->var] = *saved; else ctx.env.erase(f->var);
      return true;
    }
    case FormulaKind::Exists: {
      auto saved = ctx.env.find(f->var) != ctx.env.end()
                       ? std::optional<unsigned>(ctx.env[f->var])
                       : std::nullopt;
      for (unsigned a = 1; a <= ctx.world->domain_size(); ++a) {
        ctx.env[f->var] = a;
        if (eval_rec(f->left, ctx)) {
          if (saved) ctx.env[f->var] = *saved; else ctx.env.erase(f->var);
          return true;
        }
      }
      if (saved) ctx.env[f->var] = *saved; else ctx.env.erase(f->var);
      return false;
    }
  }
  return false;
}

}  // namespace

bool evaluate(const Formula& sentence, const Structure& world) {
  if (!is_sentence(sentence))
    throw ValidationError("evaluate: formula has free variables");
  EvalContext ctx{&world, {}};
  return eval_rec(sentence, ctx);
}

bool evaluate_under(const Formula& f, const Structure& world,
                    const std::map<std::string, unsigned>& env) {
  EvalContext ctx{&world, env};
  return eval_rec(f, ctx);
}

void for_each_structure(const Vocabulary& vocab, unsigned n, unsigned cap_bits,
                        const std::function<void(const Structure&)>& fn) {
  Structure world(vocab, n);
  std::size_t bits = world.tuple_count();
  if (bits > cap_bits)
    throw ResourceCapError("structure enumeration needs " + std::to_string(bits) +
                           " tuple bits, cap is " + std::to_string(cap_bits));
  std::uint64_t total = std::uint64_t{1} << bits;
  for (std::uint64_t code = 0; code < total; ++code) {
    for (std::size_t b = 0; b < bits; ++b) world.set_bit(b, (code >> b) & 1);
    fn(world);
  }
}

Structure permute_structure(const Structure& world, const std::vector<unsigned>& perm) {
  const Vocabulary& vocab = world.vocab();
  unsigned n = world.domain_size();
  Structure out(vocab, n);
  for (std::size_t r = 0; r < vocab.size(); ++r) {
    unsigned arity = vocab.symbol(r).arity;
    if (n == 0 && arity > 0) continue;
    std::vector<unsigned> args(arity, 1), image(arity, 1);
    bool done = false;
    while (!done) {
      for (unsigned i = 0; i < arity; ++i) image[i] = perm[args[i] - 1];
      if (world.holds(r, args)) out.set(r, image, true);
      done = true;
      for (unsigned i = arity; i-- > 0;) {
        if (args[i] < n) {
          ++args[i];
          for (unsigned j = i + 1; j < arity; ++j) args[j] = 1;
          done = false;
          break;
        }
      }
      if (arity == 0) break;
      if (n == 0) break;
    }
  }
  return out;
}

}  // namespace liftcount
