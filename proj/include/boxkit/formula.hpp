#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace boxkit {

// Connectives of the core language. Everything else (~, T, <->, ==, <>) is
// an abbreviation and is expanded away before any formula is built.
enum class Conn : uint8_t { Var, Bot, And, Or, Imp, Box, K };

// Sublanguages: Fm0 = no modality at all, Fm1 = no K, FmE = no Box,
// Fm = unrestricted.
enum class Language : uint8_t { Fm0, Fm1, FmE, Fm };

inline const char* language_name(Language l) {
  switch (l) {
    case Language::Fm0: return "Fm0";
    case Language::Fm1: return "Fm1";
    case Language::FmE: return "FmE";
    case Language::Fm: return "Fm";
  }
  return "?";
}

// Immutable shared tree; copying is a pointer copy.
class Formula {
  struct Node;
  using Ptr = std::shared_ptr<const Node>;

  struct Node {
    Conn c;
    std::string name;
    Ptr l, r;
    size_t hash = 0;
    bool has_box = false, has_k = false;
    int size = 1;

    Node(Conn c_, std::string n, Ptr l_, Ptr r_)
        : c(c_), name(std::move(n)), l(std::move(l_)), r(std::move(r_)) {
      size_t h = (static_cast<size_t>(c) + 2) * 0x9e3779b97f4a7c15ull;
      if (c == Conn::Var) {
        h ^= std::hash<std::string>()(name) + 0x9e3779b97f4a7c15ull + (h << 6);
      } else if (c != Conn::Bot) {
        h ^= l->hash + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        has_box = l->has_box;
        has_k = l->has_k;
        size = l->size + 1;
        if (r) {
          h ^= r->hash + 0x517cc1b727220a95ull + (h << 6) + (h >> 2);
          has_box = has_box || r->has_box;
          has_k = has_k || r->has_k;
          size += r->size;
        }
        if (c == Conn::Box) has_box = true;
        if (c == Conn::K) has_k = true;
      }
      hash = h;
    }
  };

 public:
  Formula() : node_(bot_node()) {}

  static Formula var(std::string name) {
    if (name.empty()) throw std::invalid_argument("empty variable name");
    return Formula(std::make_shared<const Node>(Conn::Var, std::move(name), nullptr, nullptr));
  }
  static Formula bot() { return Formula(bot_node()); }
  static Formula and_(const Formula& l, const Formula& r) { return mk(Conn::And, l.node_, r.node_); }
  static Formula or_(const Formula& l, const Formula& r) { return mk(Conn::Or, l.node_, r.node_); }
  static Formula imp(const Formula& l, const Formula& r) { return mk(Conn::Imp, l.node_, r.node_); }
  static Formula box(const Formula& f) { return mk(Conn::Box, f.node_, nullptr); }
  static Formula k(const Formula& f) { return mk(Conn::K, f.node_, nullptr); }

  // Abbreviations, stored in expanded form.
  static Formula neg(const Formula& f) { return imp(f, bot()); }
  static Formula top() { return neg(bot()); }
  static Formula iff(const Formula& l, const Formula& r) { return and_(imp(l, r), imp(r, l)); }
  static Formula equiv(const Formula& l, const Formula& r) { return box(iff(l, r)); }
  static Formula diamond(const Formula& f) { return neg(box(neg(f))); }

  Conn conn() const { return node_->c; }
  const std::string& var_name() const { return node_->name; }
  Formula left() const { return Formula(node_->l); }
  Formula right() const { return Formula(node_->r); }
  Formula child() const { return Formula(node_->l); }  // Box / K operand

  bool is_var() const { return conn() == Conn::Var; }
  bool is_bot() const { return conn() == Conn::Bot; }
  bool has_box() const { return node_->has_box; }
  bool has_k() const { return node_->has_k; }
  int size() const { return node_->size; }

  bool in_language(Language lang) const {
    switch (lang) {
      case Language::Fm0: return !has_box() && !has_k();
      case Language::Fm1: return !has_k();
      case Language::FmE: return !has_box();
      case Language::Fm: return true;
    }
    return false;
  }

  size_t hash() const { return node_->hash; }

  bool operator==(const Formula& o) const { return eq(node_, o.node_); }
  bool operator!=(const Formula& o) const { return !eq(node_, o.node_); }
  bool operator<(const Formula& o) const { return lt(node_, o.node_); }

  void collect_vars(std::set<std::string>& out) const {
    switch (conn()) {
      case Conn::Var: out.insert(var_name()); return;
      case Conn::Bot: return;
      case Conn::Box:
      case Conn::K: child().collect_vars(out); return;
      default:
        left().collect_vars(out);
        right().collect_vars(out);
    }
  }
  std::set<std::string> vars() const {
    std::set<std::string> out;
    collect_vars(out);
    return out;
  }

 private:
  explicit Formula(Ptr n) : node_(std::move(n)) {}

  static Formula mk(Conn c, Ptr l, Ptr r) {
    return Formula(std::make_shared<const Node>(c, "", std::move(l), std::move(r)));
  }
  static const Ptr& bot_node() {
    static const Ptr n = std::make_shared<const Node>(Conn::Bot, "", nullptr, nullptr);
    return n;
  }

  static bool eq(const Ptr& a, const Ptr& b) {
    if (a == b) return true;
    if (a->hash != b->hash || a->c != b->c) return false;
    switch (a->c) {
      case Conn::Var: return a->name == b->name;
      case Conn::Bot: return true;
      case Conn::Box:
      case Conn::K: return eq(a->l, b->l);
      default: return eq(a->l, b->l) && eq(a->r, b->r);
    }
  }

  static bool lt(const Ptr& a, const Ptr& b) {
    if (eq(a, b)) return false;
    if (a->c != b->c) return a->c < b->c;
    switch (a->c) {
      case Conn::Var: return a->name < b->name;
      case Conn::Bot: return false;
      case Conn::Box:
      case Conn::K: return lt(a->l, b->l);
      default:
        if (!eq(a->l, b->l)) return lt(a->l, b->l);
        return lt(a->r, b->r);
    }
  }

  Ptr node_;
};

struct FormulaHash {
  size_t operator()(const Formula& f) const { return f.hash(); }
};

// Simultaneous substitution of several variables. Single-variable
// substitution is the one-entry case.
inline Formula substitute_all(const Formula& f, const std::map<std::string, Formula>& sub) {
  switch (f.conn()) {
    case Conn::Var: {
      auto it = sub.find(f.var_name());
      return it == sub.end() ? f : it->second;
    }
    case Conn::Bot: return f;
    case Conn::And: return Formula::and_(substitute_all(f.left(), sub), substitute_all(f.right(), sub));
    case Conn::Or: return Formula::or_(substitute_all(f.left(), sub), substitute_all(f.right(), sub));
    case Conn::Imp: return Formula::imp(substitute_all(f.left(), sub), substitute_all(f.right(), sub));
    case Conn::Box: return Formula::box(substitute_all(f.child(), sub));
    case Conn::K: return Formula::k(substitute_all(f.child(), sub));
  }
  throw std::logic_error("unreachable");
}

inline Formula substitute(const Formula& f, const std::string& x, const Formula& g) {
  return substitute_all(f, {{x, g}});
}

// Propositional skeleton: replaces each maximal Box- or K-headed subformula
// by a variable, equal subformulas sharing one variable. Fresh variables are
// named _s0, _s1, ... in first-occurrence order, so output is reproducible.
struct Skeleton {
  Formula propositional;                                 // always in Fm0
  std::vector<std::pair<std::string, Formula>> binding;  // fresh var -> abstracted subformula
};

namespace detail {
inline Formula skeleton_walk(const Formula& f, std::map<Formula, std::string>& seen,
                             std::vector<std::pair<std::string, Formula>>& binding) {
  if (f.conn() == Conn::Box || f.conn() == Conn::K) {
    auto it = seen.find(f);
    if (it != seen.end()) return Formula::var(it->second);
    std::string fresh = "_s" + std::to_string(binding.size());
    seen.emplace(f, fresh);
    binding.emplace_back(fresh, f);
    return Formula::var(fresh);
  }
  switch (f.conn()) {
    case Conn::Var:
    case Conn::Bot: return f;
    case Conn::And:
    case Conn::Or:
    case Conn::Imp: {
      Formula l = skeleton_walk(f.left(), seen, binding);   // left first: fresh
      Formula r = skeleton_walk(f.right(), seen, binding);  // variables number
      if (f.conn() == Conn::And) return Formula::and_(l, r);  // in reading order
      if (f.conn() == Conn::Or) return Formula::or_(l, r);
      return Formula::imp(l, r);
    }
    default: throw std::logic_error("unreachable");
  }
}
}  // namespace detail

inline Skeleton skeleton(const Formula& f) {
  Skeleton s;
  std::map<Formula, std::string> seen;
  s.propositional = detail::skeleton_walk(f, seen, s.binding);
  return s;
}

inline Formula apply_binding(const Formula& prop,
                             const std::vector<std::pair<std::string, Formula>>& binding) {
  std::map<std::string, Formula> sub(binding.begin(), binding.end());
  return substitute_all(prop, sub);
}

}  // namespace boxkit
