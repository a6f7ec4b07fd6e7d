#pragma once

#include <string>

#include "boxkit/formula.hpp"

namespace boxkit {

// Canonical ASCII printer. Abbreviations are re-introduced greedily,
// outermost-first: a node is printed as ==, <>, T, ~ or <-> whenever it has
// the corresponding expanded shape. parse(print(f)) == f structurally.

namespace detail {

inline bool is_neg_shape(const Formula& f) {
  return f.conn() == Conn::Imp && f.right().is_bot();
}
inline bool is_top_shape(const Formula& f) { return is_neg_shape(f) && f.left().is_bot(); }
inline bool is_dia_shape(const Formula& f) {
  // ~[]~g
  return is_neg_shape(f) && f.left().conn() == Conn::Box && is_neg_shape(f.left().child());
}
inline bool is_iff_shape(const Formula& f) {
  return f.conn() == Conn::And && f.left().conn() == Conn::Imp && f.right().conn() == Conn::Imp &&
         f.left().left() == f.right().right() && f.left().right() == f.right().left();
}
inline bool is_equiv_shape(const Formula& f) {
  return f.conn() == Conn::Box && is_iff_shape(f.child());
}

// Precedence levels: 0 = <->/==, 1 = ->, 2 = |, 3 = &, 4 = prefix, 5 = atom.
inline void print_at(const Formula& f, int level, std::string& out) {
  auto paren = [&](int node_level, auto&& body) {
    bool need = node_level < level;
    if (need) out += '(';
    body();
    if (need) out += ')';
  };

  if (is_top_shape(f)) { out += 'T'; return; }
  if (is_dia_shape(f)) {
    out += "<>";
    print_at(f.left().child().left(), 4, out);
    return;
  }
  if (is_equiv_shape(f)) {
    paren(0, [&] {
      print_at(f.child().left().left(), 1, out);
      out += " == ";
      print_at(f.child().left().right(), 1, out);
    });
    return;
  }
  if (is_neg_shape(f)) {
    out += '~';
    print_at(f.left(), 4, out);
    return;
  }
  if (is_iff_shape(f)) {
    paren(0, [&] {
      print_at(f.left().left(), 1, out);
      out += " <-> ";
      print_at(f.left().right(), 1, out);
    });
    return;
  }
  switch (f.conn()) {
    case Conn::Var: out += f.var_name(); return;
    case Conn::Bot: out += "_|_"; return;
    case Conn::Box:
      out += "[]";
      print_at(f.child(), 4, out);
      return;
    case Conn::K:
      out += 'K';
      print_at(f.child(), 4, out);
      return;
    case Conn::And:
      paren(3, [&] {
        print_at(f.left(), 3, out);
        out += " & ";
        print_at(f.right(), 4, out);
      });
      return;
    case Conn::Or:
      paren(2, [&] {
        print_at(f.left(), 2, out);
        out += " | ";
        print_at(f.right(), 3, out);
      });
      return;
    case Conn::Imp:
      paren(1, [&] {
        print_at(f.left(), 2, out);
        out += " -> ";
        print_at(f.right(), 1, out);
      });
      return;
  }
}

}  // namespace detail

inline std::string print(const Formula& f) {
  std::string out;
  detail::print_at(f, 0, out);
  return out;
}

}  // namespace boxkit
