#pragma once

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "boxkit/formula.hpp"

namespace boxkit {

// ASCII grammar, loosest first:
//   formula := imp ( ('<->' | '==') imp )?      (non-associative)
//   imp     := or ('->' imp)?                   (right-associative)
//   or      := and ('|' and)*
//   and     := unary ('&' unary)*
//   unary   := ('~' | '[]' | '<>' | 'K') unary | atom
//   atom    := ident | '_|_' | 'T' | '(' formula ')'
// Unicode aliases accepted on input: ¬ □ ◇ ∧ ∨ → ↔ ≡ ⊥ ⊤.
// All abbreviations are expanded while parsing; the result uses only the
// seven core constructors.

struct ParseError : std::runtime_error {
  size_t offset;
  std::vector<std::string> expected;

  ParseError(size_t off, std::vector<std::string> exp, const std::string& found)
      : std::runtime_error(render(off, exp, found)), offset(off), expected(std::move(exp)) {}

  static std::string render(size_t off, const std::vector<std::string>& exp,
                            const std::string& found) {
    std::ostringstream os;
    os << "syntax error at byte " << off << ": found " << found << ", expected ";
    for (size_t i = 0; i < exp.size(); ++i) os << (i ? " | " : "") << exp[i];
    return os.str();
  }
};

namespace detail {

enum class Tok : uint8_t {
  Ident, Bot, Top, LPar, RPar, Not, BoxOp, Dia, KOp, And, Or, Imp, Iff, Equiv, End
};

inline const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Bot: return "'_|_'";
    case Tok::Top: return "'T'";
    case Tok::LPar: return "'('";
    case Tok::RPar: return "')'";
    case Tok::Not: return "'~'";
    case Tok::BoxOp: return "'[]'";
    case Tok::Dia: return "'<>'";
    case Tok::KOp: return "'K'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Imp: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::Equiv: return "'=='";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Lexer {
  const std::string& text;
  size_t pos = 0;
  Tok tok = Tok::End;
  size_t tok_off = 0;
  std::string ident;

  explicit Lexer(const std::string& t) : text(t) { next(); }

  bool eat(const char* s) {
    size_t n = std::char_traits<char>::length(s);
    if (text.compare(pos, n, s) == 0) {
      pos += n;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string found = tok == Tok::Ident ? "identifier '" + ident + "'" : tok_name(tok);
    throw ParseError(tok_off, std::move(expected), found);
  }

  void next() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    tok_off = pos;
    if (pos >= text.size()) { tok = Tok::End; return; }
    if (eat("_|_") || eat("⊥")) { tok = Tok::Bot; return; }
    if (eat("(")) { tok = Tok::LPar; return; }
    if (eat(")")) { tok = Tok::RPar; return; }
    if (eat("<->") || eat("↔")) { tok = Tok::Iff; return; }
    if (eat("<>") || eat("◇")) { tok = Tok::Dia; return; }
    if (eat("==") || eat("≡")) { tok = Tok::Equiv; return; }
    if (eat("->") || eat("→")) { tok = Tok::Imp; return; }
    if (eat("[]") || eat("□")) { tok = Tok::BoxOp; return; }
    if (eat("~") || eat("¬")) { tok = Tok::Not; return; }
    if (eat("&") || eat("∧")) { tok = Tok::And; return; }
    if (eat("|") || eat("∨")) { tok = Tok::Or; return; }
    if (eat("⊤")) { tok = Tok::Top; return; }
    char c = text[pos];
    if (c == 'K') { ++pos; tok = Tok::KOp; return; }  // K never starts an identifier
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t s = pos;
      while (pos < text.size()) {
        char d = text[pos];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '\'') ++pos;
        else break;
      }
      ident = text.substr(s, pos - s);
      tok = ident == "T" ? Tok::Top : Tok::Ident;
      return;
    }
    tok = Tok::End;
    throw ParseError(pos, {"a formula token"}, std::string("'") + c + "'");
  }
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lx_(text) {}

  Formula run() {
    Formula f = formula();
    if (lx_.tok != Tok::End) lx_.fail({"'&'", "'|'", "'->'", "'<->'", "'=='", "end of input"});
    return f;
  }

 private:
  Lexer lx_;

  Formula formula() {
    Formula l = imp();
    if (lx_.tok == Tok::Iff) {
      lx_.next();
      return Formula::iff(l, imp());
    }
    if (lx_.tok == Tok::Equiv) {
      lx_.next();
      return Formula::equiv(l, imp());
    }
    return l;
  }

  Formula imp() {
    Formula l = or_();
    if (lx_.tok == Tok::Imp) {
      lx_.next();
      return Formula::imp(l, imp());
    }
    return l;
  }

  Formula or_() {
    Formula l = and_();
    while (lx_.tok == Tok::Or) {
      lx_.next();
      l = Formula::or_(l, and_());
    }
    return l;
  }

  Formula and_() {
    Formula l = unary();
    while (lx_.tok == Tok::And) {
      lx_.next();
      l = Formula::and_(l, unary());
    }
    return l;
  }

  Formula unary() {
    switch (lx_.tok) {
      case Tok::Not: lx_.next(); return Formula::neg(unary());
      case Tok::BoxOp: lx_.next(); return Formula::box(unary());
      case Tok::Dia: lx_.next(); return Formula::diamond(unary());
      case Tok::KOp: lx_.next(); return Formula::k(unary());
      default: return atom();
    }
  }

  Formula atom() {
    switch (lx_.tok) {
      case Tok::Ident: {
        Formula f = Formula::var(lx_.ident);
        lx_.next();
        return f;
      }
      case Tok::Bot: lx_.next(); return Formula::bot();
      case Tok::Top: lx_.next(); return Formula::top();
      case Tok::LPar: {
        lx_.next();
        Formula f = formula();
        if (lx_.tok != Tok::RPar) lx_.fail({"')'"});
        lx_.next();
        return f;
      }
      default:
        lx_.fail({"identifier", "'_|_'", "'T'", "'('", "'~'", "'[]'", "'<>'", "'K'"});
    }
  }
};

}  // namespace detail

inline Formula parse(const std::string& text) { return detail::Parser(text).run(); }

}  // namespace boxkit
