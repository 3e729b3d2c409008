#include "liftcount/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "liftcount/errors.hpp"

namespace liftcount {

namespace {

enum class Tok {
  Ident,    // lowercase-led identifier
  Relation, // uppercase-led identifier
  LParen,
  RParen,
  Comma,
  Dot,
  Bang,
  Amp,
  Pipe,
  Arrow,
  DArrow,
  Eq,
  Neq,
  KwForall,
  KwExists,
  KwTrue,
  KwFalse,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  unsigned line;
  unsigned col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_space();
    current_.line = line_;
    current_.col = col_;
    if (pos_ >= src_.size()) {
      current_ = {Tok::End, "", line_, col_};
      return;
    }
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        word += get();
      if (word == "forall") current_ = {Tok::KwForall, word, current_.line, current_.col};
      else if (word == "exists") current_ = {Tok::KwExists, word, current_.line, current_.col};
      else if (word == "true") current_ = {Tok::KwTrue, word, current_.line, current_.col};
      else if (word == "false") current_ = {Tok::KwFalse, word, current_.line, current_.col};
      else if (std::isupper(static_cast<unsigned char>(word[0])))
        current_ = {Tok::Relation, word, current_.line, current_.col};
      else
        current_ = {Tok::Ident, word, current_.line, current_.col};
      return;
    }
    switch (c) {
      case '(': get(); current_.kind = Tok::LParen; return;
      case ')': get(); current_.kind = Tok::RParen; return;
      case ',': get(); current_.kind = Tok::Comma; return;
      case '.': get(); current_.kind = Tok::Dot; return;
      case '&': get(); current_.kind = Tok::Amp; return;
      case '|': get(); current_.kind = Tok::Pipe; return;
      case '=': get(); current_.kind = Tok::Eq; return;
      case '!':
        get();
        if (pos_ < src_.size() && src_[pos_] == '=') {
          get();
          current_.kind = Tok::Neq;
        } else {
          current_.kind = Tok::Bang;
        }
        return;
      case '-':
        get();
        if (pos_ < src_.size() && src_[pos_] == '>') {
          get();
          current_.kind = Tok::Arrow;
          return;
        }
        throw ParseError("expected '->'", line_, col_);
      case '<':
        get();
        if (pos_ + 1 < src_.size() && src_[pos_] == '-' && src_[pos_ + 1] == '>') {
          get();
          get();
          current_.kind = Tok::DArrow;
          return;
        }
        throw ParseError("expected '<->'", line_, col_);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
    }
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') get();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        get();
      } else {
        break;
      }
    }
  }

  char get() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  unsigned line_ = 1;
  unsigned col_ = 1;
  Token current_{};
};

class Parser {
 public:
  Parser(std::string_view text, const Vocabulary* vocab) : lex_(text), vocab_(vocab) {}

  Formula parse() {
    Formula f = parse_iff();
    const Token& t = lex_.peek();
    if (t.kind != Tok::End) throw ParseError("trailing input '" + t.text + "'", t.line, t.col);
    return f;
  }

 private:
  Formula parse_iff() {
    Formula f = parse_implies();
    while (lex_.peek().kind == Tok::DArrow) {
      lex_.take();
      f = f_iff(f, parse_implies());
    }
    return f;
  }

  Formula parse_implies() {
    Formula f = parse_or();
    if (lex_.peek().kind == Tok::Arrow) {
      lex_.take();
      return f_implies(f, parse_implies());  // right-associative
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (lex_.peek().kind == Tok::Pipe) {
      lex_.take();
      f = f_or(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (lex_.peek().kind == Tok::Amp) {
      lex_.take();
      f = f_and(f, parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Bang) {
      lex_.take();
      return f_not(parse_unary());
    }
    if (t.kind == Tok::KwForall || t.kind == Tok::KwExists) return parse_quantified();
    return parse_primary();
  }

  Formula parse_quantified() {
    Token q = lex_.take();
    std::vector<std::string> vars;
    vars.push_back(expect_variable());
    while (lex_.peek().kind == Tok::Comma) {
      lex_.take();
      vars.push_back(expect_variable());
    }
    expect(Tok::Dot, "'.'");
    Formula body = parse_iff();  // quantifier extends maximally right
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      body = q.kind == Tok::KwForall ? f_forall(*it, body) : f_exists(*it, body);
    return body;
  }

  Formula parse_primary() {
    Token t = lex_.take();
    switch (t.kind) {
      case Tok::LParen: {
        Formula f = parse_iff();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::KwTrue:
        return f_true();
      case Tok::KwFalse:
        return f_false();
      case Tok::Relation:
        return parse_atom(t);
      case Tok::Ident: {
        // variable, must continue as (in)equality
        Token op = lex_.take();
        if (op.kind == Tok::Eq) return f_eq(t.text, expect_variable());
        if (op.kind == Tok::Neq) return f_not(f_eq(t.text, expect_variable()));
        throw ParseError("expected '=' or '!=' after variable '" + t.text + "'", op.line,
                         op.col);
      }
      default:
        throw ParseError("expected a formula, found '" + t.text + "'", t.line, t.col);
    }
  }

  Formula parse_atom(const Token& name) {
    std::vector<std::string> args;
    if (lex_.peek().kind == Tok::LParen) {
      lex_.take();
      args.push_back(expect_variable());
      while (lex_.peek().kind == Tok::Comma) {
        lex_.take();
        args.push_back(expect_variable());
      }
      expect(Tok::RParen, "')'");
    }
    if (vocab_) {
      if (!vocab_->has(name.text))
        throw ParseError("undeclared relation '" + name.text + "'", name.line, name.col);
      unsigned arity = vocab_->arity_of(name.text);
      if (arity != args.size())
        throw ParseError("relation '" + name.text + "' has arity " + std::to_string(arity) +
                             ", got " + std::to_string(args.size()) + " arguments",
                         name.line, name.col);
    }
    return f_atom(name.text, std::move(args));
  }

  std::string expect_variable() {
    Token t = lex_.take();
    if (t.kind != Tok::Ident)
      throw ParseError("expected a variable, found '" + t.text + "'", t.line, t.col);
    return t.text;
  }

  void expect(Tok kind, const char* what) {
    Token t = lex_.take();
    if (t.kind != kind)
      throw ParseError(std::string("expected ") + what + ", found '" + t.text + "'", t.line,
                       t.col);
  }

  Lexer lex_;
  const Vocabulary* vocab_;
};

}  // namespace

Formula parse_formula(std::string_view text, const Vocabulary& vocab) {
  return Parser(text, &vocab).parse();
}

Formula parse_formula_unchecked(std::string_view text) {
  return Parser(text, nullptr).parse();
}

Vocabulary infer_vocabulary(std::string_view text) {
  Formula f = Parser(text, nullptr).parse();
  Vocabulary vocab;
  for (const auto& [name, arity] : relations_used(f)) vocab.add_relation(name, arity);
  return vocab;
}

}  // namespace liftcount
