#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "boxkit/formula.hpp"
#include "boxkit/ipc.hpp"
#include "boxkit/print.hpp"

namespace boxkit {

// The deductive systems. A trailing '-' (spelled m in identifiers) marks the
// belief variant; the plain name is the knowledge variant with intuitionistic
// reflection. EL5star extends L5 with co-reflection, reflection and belief
// distribution over the full language, all as axioms.
enum class LogicId {
  L, L3, L4, L5,
  EL3m, EL4m, EL5m,
  E4L3m, E4L4m, E4L5m,
  E5L3m, E5L4m, E5L5m,
  E6L3m, E6L4m, E6L5m,
  EL3, EL4, EL5,
  E4L3, E4L4, E4L5,
  E5L3, E5L4, E5L5,
  E6L3, E6L4, E6L5,
  IELm, IEL,
  EL5star,
};

enum class SchemeId {
  INT, A1, A2, A3, A4, A5,
  KBel, CoRe, IntRe, E4, E5, PNB, NNB,
  TRANS,        // the transitivity axiom of the weakest system
  TND, SP,      // theorem schemes, never boxable by AN
  IntCo,        // co-reflection as an axiom (IEL families and EL5star)
};

inline const char* to_string(SchemeId s) {
  switch (s) {
    case SchemeId::INT: return "INT";
    case SchemeId::A1: return "A1";
    case SchemeId::A2: return "A2";
    case SchemeId::A3: return "A3";
    case SchemeId::A4: return "A4";
    case SchemeId::A5: return "A5";
    case SchemeId::KBel: return "KBel";
    case SchemeId::CoRe: return "CoRe";
    case SchemeId::IntRe: return "IntRe";
    case SchemeId::E4: return "E4";
    case SchemeId::E5: return "E5";
    case SchemeId::PNB: return "PNB";
    case SchemeId::NNB: return "NNB";
    case SchemeId::TRANS: return "TRANS";
    case SchemeId::TND: return "TND";
    case SchemeId::SP: return "SP";
    case SchemeId::IntCo: return "IntCo";
  }
  return "?";
}

inline std::optional<SchemeId> scheme_from_string(const std::string& s) {
  static const std::map<std::string, SchemeId> m = {
      {"INT", SchemeId::INT}, {"A1", SchemeId::A1}, {"A2", SchemeId::A2},
      {"A3", SchemeId::A3}, {"A4", SchemeId::A4}, {"A5", SchemeId::A5},
      {"KBel", SchemeId::KBel}, {"CoRe", SchemeId::CoRe}, {"IntRe", SchemeId::IntRe},
      {"E4", SchemeId::E4}, {"E5", SchemeId::E5}, {"PNB", SchemeId::PNB},
      {"NNB", SchemeId::NNB}, {"TRANS", SchemeId::TRANS}, {"TND", SchemeId::TND},
      {"SP", SchemeId::SP}, {"IntCo", SchemeId::IntCo}};
  auto it = m.find(s);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

// Epistemic strength groups.
enum class KGroup { None, Base, E4, E5, E6 };

struct LogicTraits {
  const char* name;
  Language lang;
  int box_degree;      // 3, 4 or 5; 0 when the box is absent (IEL families)
  KGroup kgroup;
  bool knowledge;      // has IntRe
  bool intco;          // has IntCo as an axiom
  bool tnd, sp, an;    // availability of the theorem schemes and of AN
};

inline const LogicTraits& traits(LogicId id) {
  static const std::map<LogicId, LogicTraits> t = {
      {LogicId::L, {"L", Language::Fm1, 3, KGroup::None, false, false, true, true, true}},
      {LogicId::L3, {"L3", Language::Fm1, 3, KGroup::None, false, false, true, true, true}},
      {LogicId::L4, {"L4", Language::Fm1, 4, KGroup::None, false, false, true, true, true}},
      {LogicId::L5, {"L5", Language::Fm1, 5, KGroup::None, false, false, true, true, true}},
      {LogicId::EL3m, {"EL3-", Language::Fm, 3, KGroup::Base, false, false, true, true, true}},
      {LogicId::EL4m, {"EL4-", Language::Fm, 4, KGroup::Base, false, false, true, true, true}},
      {LogicId::EL5m, {"EL5-", Language::Fm, 5, KGroup::Base, false, false, true, true, true}},
      {LogicId::E4L3m, {"E4L3-", Language::Fm, 3, KGroup::E4, false, false, true, true, true}},
      {LogicId::E4L4m, {"E4L4-", Language::Fm, 4, KGroup::E4, false, false, true, true, true}},
      {LogicId::E4L5m, {"E4L5-", Language::Fm, 5, KGroup::E4, false, false, true, true, true}},
      {LogicId::E5L3m, {"E5L3-", Language::Fm, 3, KGroup::E5, false, false, true, true, true}},
      {LogicId::E5L4m, {"E5L4-", Language::Fm, 4, KGroup::E5, false, false, true, true, true}},
      {LogicId::E5L5m, {"E5L5-", Language::Fm, 5, KGroup::E5, false, false, true, true, true}},
      {LogicId::E6L3m, {"E6L3-", Language::Fm, 3, KGroup::E6, false, false, true, true, true}},
      {LogicId::E6L4m, {"E6L4-", Language::Fm, 4, KGroup::E6, false, false, true, true, true}},
      {LogicId::E6L5m, {"E6L5-", Language::Fm, 5, KGroup::E6, false, false, true, true, true}},
      {LogicId::EL3, {"EL3", Language::Fm, 3, KGroup::Base, true, false, true, true, true}},
      {LogicId::EL4, {"EL4", Language::Fm, 4, KGroup::Base, true, false, true, true, true}},
      {LogicId::EL5, {"EL5", Language::Fm, 5, KGroup::Base, true, false, true, true, true}},
      {LogicId::E4L3, {"E4L3", Language::Fm, 3, KGroup::E4, true, false, true, true, true}},
      {LogicId::E4L4, {"E4L4", Language::Fm, 4, KGroup::E4, true, false, true, true, true}},
      {LogicId::E4L5, {"E4L5", Language::Fm, 5, KGroup::E4, true, false, true, true, true}},
      {LogicId::E5L3, {"E5L3", Language::Fm, 3, KGroup::E5, true, false, true, true, true}},
      {LogicId::E5L4, {"E5L4", Language::Fm, 4, KGroup::E5, true, false, true, true, true}},
      {LogicId::E5L5, {"E5L5", Language::Fm, 5, KGroup::E5, true, false, true, true, true}},
      {LogicId::E6L3, {"E6L3", Language::Fm, 3, KGroup::E6, true, false, true, true, true}},
      {LogicId::E6L4, {"E6L4", Language::Fm, 4, KGroup::E6, true, false, true, true, true}},
      {LogicId::E6L5, {"E6L5", Language::Fm, 5, KGroup::E6, true, false, true, true, true}},
      {LogicId::IELm, {"IEL-", Language::FmE, 0, KGroup::Base, false, true, false, false, false}},
      {LogicId::IEL, {"IEL", Language::FmE, 0, KGroup::Base, true, true, false, false, false}},
      {LogicId::EL5star, {"EL5star", Language::Fm, 5, KGroup::Base, true, true, true, true, true}},
  };
  return t.at(id);
}

inline const char* to_string(LogicId id) { return traits(id).name; }

inline std::optional<LogicId> logic_from_string(const std::string& s) {
  static const std::map<std::string, LogicId> m = [] {
    std::map<std::string, LogicId> out;
    for (int i = 0; i <= static_cast<int>(LogicId::EL5star); ++i) {
      LogicId id = static_cast<LogicId>(i);
      out.emplace(traits(id).name, id);
    }
    return out;
  }();
  auto it = m.find(s);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

inline std::vector<LogicId> all_logics() {
  std::vector<LogicId> out;
  for (int i = 0; i <= static_cast<int>(LogicId::EL5star); ++i)
    out.push_back(static_cast<LogicId>(i));
  return out;
}

inline Language language_of(LogicId id) { return traits(id).lang; }

// Axiom schemes of a logic, in the fixed matching order (INT last, so that a
// structural scheme wins whenever both apply).
inline const std::vector<SchemeId>& axiom_schemes(LogicId id) {
  static std::map<LogicId, std::vector<SchemeId>> cache;
  auto it = cache.find(id);
  if (it != cache.end()) return it->second;
  const LogicTraits& t = traits(id);
  std::vector<SchemeId> out;
  if (t.box_degree >= 3) {
    out.push_back(SchemeId::A1);
    out.push_back(SchemeId::A2);
    if (id == LogicId::L) out.push_back(SchemeId::TRANS);
    else out.push_back(SchemeId::A3);
    if (t.box_degree >= 4) out.push_back(SchemeId::A4);
    if (t.box_degree >= 5) out.push_back(SchemeId::A5);
  }
  if (t.kgroup != KGroup::None) {
    out.push_back(SchemeId::KBel);
    if (t.box_degree > 0 && !t.intco) out.push_back(SchemeId::CoRe);
    if (t.knowledge) out.push_back(SchemeId::IntRe);
    if (t.kgroup == KGroup::E4 || t.kgroup == KGroup::E5) out.push_back(SchemeId::E4);
    if (t.kgroup == KGroup::E5) out.push_back(SchemeId::E5);
    if (t.kgroup == KGroup::E6) {
      out.push_back(SchemeId::PNB);
      out.push_back(SchemeId::NNB);
    }
    if (t.intco) out.push_back(SchemeId::IntCo);
  }
  out.push_back(SchemeId::INT);
  return cache.emplace(id, std::move(out)).first->second;
}

// ---------------------------------------------------------------------------
// Scheme recognition

namespace detail {

// Patterns are formulas whose variables named $p, $q, $r are metavariables.
inline bool match_pattern(const Formula& pat, const Formula& f,
                          std::map<std::string, Formula>& binding) {
  if (pat.is_var() && pat.var_name()[0] == '$') {
    auto it = binding.find(pat.var_name());
    if (it != binding.end()) return it->second == f;
    binding.emplace(pat.var_name(), f);
    return true;
  }
  if (pat.conn() != f.conn()) return false;
  switch (pat.conn()) {
    case Conn::Var: return pat.var_name() == f.var_name();
    case Conn::Bot: return true;
    case Conn::Box:
    case Conn::K: return match_pattern(pat.child(), f.child(), binding);
    default:
      return match_pattern(pat.left(), f.left(), binding) &&
             match_pattern(pat.right(), f.right(), binding);
  }
}

inline bool matches(const Formula& pat, const Formula& f) {
  std::map<std::string, Formula> binding;
  return match_pattern(pat, f, binding);
}

inline const Formula& scheme_pattern(SchemeId s) {
  using F = Formula;
  static const F p = F::var("$p"), q = F::var("$q"), r = F::var("$r");
  static const std::map<SchemeId, F> pats = {
      {SchemeId::A1, F::imp(F::box(F::or_(p, q)), F::or_(F::box(p), F::box(q)))},
      {SchemeId::A2, F::imp(F::box(p), p)},
      {SchemeId::A3, F::imp(F::box(F::imp(p, q)), F::box(F::imp(F::box(p), F::box(q))))},
      {SchemeId::A4, F::imp(F::box(p), F::box(F::box(p)))},
      {SchemeId::A5, F::imp(F::neg(F::box(p)), F::box(F::neg(F::box(p))))},
      {SchemeId::KBel, F::imp(F::k(F::imp(p, q)), F::imp(F::k(p), F::k(q)))},
      {SchemeId::CoRe, F::imp(F::box(p), F::box(F::k(p)))},
      {SchemeId::IntRe, F::imp(F::k(p), F::neg(F::neg(p)))},
      {SchemeId::E4, F::imp(F::k(p), F::k(F::k(p)))},
      {SchemeId::E5, F::imp(F::neg(F::k(p)), F::k(F::neg(F::k(p))))},
      {SchemeId::PNB, F::imp(F::k(p), F::box(F::k(p)))},
      {SchemeId::NNB, F::imp(F::neg(F::k(p)), F::box(F::neg(F::k(p))))},
      {SchemeId::TRANS,
       F::imp(F::box(F::imp(p, q)), F::imp(F::box(F::imp(q, r)), F::box(F::imp(p, r))))},
      {SchemeId::TND, F::or_(p, F::neg(p))},
      {SchemeId::IntCo, F::imp(p, F::k(p))},
  };
  return pats.at(s);
}

// Is there a context chi and variable x with chi[x:=a] = c and chi[x:=b] = d?
// Positions where c and d agree stay concrete; positions where they differ
// must be exactly the pair (a, b).
inline bool anti_unifies(const Formula& c, const Formula& d, const Formula& a, const Formula& b) {
  if (c == d) return true;
  if (c == a && d == b) return true;
  if (c.conn() != d.conn()) return false;
  switch (c.conn()) {
    case Conn::Var:
    case Conn::Bot: return false;
    case Conn::Box:
    case Conn::K: return anti_unifies(c.child(), d.child(), a, b);
    default:
      return anti_unifies(c.left(), d.left(), a, b) && anti_unifies(c.right(), d.right(), a, b);
  }
}

// f == (a == b), decomposed
inline bool split_equiv(const Formula& f, Formula& a, Formula& b) {
  if (f.conn() != Conn::Box) return false;
  Formula g = f.child();
  if (g.conn() != Conn::And || g.left().conn() != Conn::Imp || g.right().conn() != Conn::Imp)
    return false;
  if (g.left().left() != g.right().right() || g.left().right() != g.right().left()) return false;
  a = g.left().left();
  b = g.left().right();
  return true;
}

}  // namespace detail

// Substitution principle shape: (a == b) -> (chi[x:=a] == chi[x:=b]).
inline bool is_sp_instance(const Formula& f) {
  if (f.conn() != Conn::Imp) return false;
  Formula a, b, c, d;
  if (!detail::split_equiv(f.left(), a, b)) return false;
  if (!detail::split_equiv(f.right(), c, d)) return false;
  return detail::anti_unifies(c, d, a, b);
}

inline bool is_tnd_instance(const Formula& f) {
  return detail::matches(detail::scheme_pattern(SchemeId::TND), f);
}

inline bool is_int_instance(const Formula& f) {
  return ipc_theorem({}, skeleton(f).propositional);
}

inline bool is_scheme_instance(SchemeId s, const Formula& f) {
  switch (s) {
    case SchemeId::INT: return is_int_instance(f);
    case SchemeId::SP: return is_sp_instance(f);
    default: return detail::matches(detail::scheme_pattern(s), f);
  }
}

// First axiom scheme of the logic that f instantiates, under the fixed
// matching order (INT last).
inline std::optional<SchemeId> is_axiom_instance(LogicId logic, const Formula& f) {
  for (SchemeId s : axiom_schemes(logic))
    if (is_scheme_instance(s, f)) return s;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Derivations

struct Justification {
  enum class Kind { Hypothesis, Axiom, TheoremScheme, AN, MP };
  Kind kind = Kind::Hypothesis;
  SchemeId scheme = SchemeId::INT;  // Axiom / AN / TheoremScheme
  std::string extra;                // names a basis extra instead of a SchemeId
  int i = -1, j = -1;               // MP: i antecedent line, j implication line

  static Justification hyp() { return {Kind::Hypothesis, SchemeId::INT, "", -1, -1}; }
  static Justification ax(SchemeId s) { return {Kind::Axiom, s, "", -1, -1}; }
  static Justification ax_extra(std::string name) {
    return {Kind::Axiom, SchemeId::INT, std::move(name), -1, -1};
  }
  static Justification thm(SchemeId s) { return {Kind::TheoremScheme, s, "", -1, -1}; }
  static Justification an(SchemeId s) { return {Kind::AN, s, "", -1, -1}; }
  static Justification an_extra(std::string name) {
    return {Kind::AN, SchemeId::INT, std::move(name), -1, -1};
  }
  static Justification mp(int ante, int impl) { return {Kind::MP, SchemeId::INT, "", ante, impl}; }
};

struct Derivation {
  struct Line {
    Formula formula;
    Justification just;
  };
  std::vector<Formula> hypotheses;
  std::vector<Line> lines;

  const Formula& conclusion() const {
    if (lines.empty()) throw std::logic_error("empty derivation");
    return lines.back().formula;
  }
};

// Axiom basis override: lets the checker validate derivations against a
// different axiomatization of the same signature (used to check deductive
// equivalences between alternative bases). 'extra' holds named pattern
// axioms in the metavariable notation of scheme patterns.
struct AxiomBasis {
  std::vector<SchemeId> schemes;
  std::vector<std::pair<std::string, Formula>> extra;
};

struct CheckOptions {
  bool strict_sp = false;  // SP as a primitive line only in the weakest system
  std::optional<AxiomBasis> basis;
};

struct CheckResult {
  bool accepted = true;
  int line = -1;  // 0-based offending line
  std::string reason;

  static CheckResult ok() { return {}; }
  static CheckResult bad(int line, std::string reason) { return {false, line, std::move(reason)}; }
};

namespace detail {

inline bool basis_has(const AxiomBasis& b, SchemeId s) {
  for (SchemeId x : b.schemes)
    if (x == s) return true;
  return false;
}

inline const Formula* basis_extra(const AxiomBasis& b, const std::string& name) {
  for (const auto& [n, pat] : b.extra)
    if (n == name) return &pat;
  return nullptr;
}

}  // namespace detail

inline AxiomBasis default_basis(LogicId logic) {
  return AxiomBasis{axiom_schemes(logic), {}};
}

inline CheckResult check_derivation(LogicId logic, const Derivation& d, CheckOptions opt = {}) {
  const LogicTraits& t = traits(logic);
  const AxiomBasis basis = opt.basis ? *opt.basis : default_basis(logic);

  for (const Formula& h : d.hypotheses)
    if (!h.in_language(t.lang))
      return CheckResult::bad(-1, "hypothesis outside language " + std::string(language_name(t.lang)) +
                                      ": " + print(h));

  for (int i = 0; i < static_cast<int>(d.lines.size()); ++i) {
    const auto& [f, just] = d.lines[static_cast<size_t>(i)];
    if (!f.in_language(t.lang))
      return CheckResult::bad(i, "language violation: formula outside " +
                                     std::string(language_name(t.lang)));
    switch (just.kind) {
      case Justification::Kind::Hypothesis: {
        bool found = false;
        for (const Formula& h : d.hypotheses) found = found || h == f;
        if (!found) return CheckResult::bad(i, "formula is not among the hypotheses");
        break;
      }
      case Justification::Kind::Axiom: {
        if (!just.extra.empty()) {
          const Formula* pat = detail::basis_extra(basis, just.extra);
          if (!pat) return CheckResult::bad(i, "unknown axiom '" + just.extra + "'");
          if (!detail::matches(*pat, f))
            return CheckResult::bad(i, "scheme mismatch: not an instance of " + just.extra);
          break;
        }
        if (just.scheme == SchemeId::TND || just.scheme == SchemeId::SP)
          return CheckResult::bad(i, "theorem scheme cited as axiom");
        if (!detail::basis_has(basis, just.scheme))
          return CheckResult::bad(i, std::string(to_string(just.scheme)) +
                                         " is not an axiom scheme of " + t.name);
        if (!is_scheme_instance(just.scheme, f))
          return CheckResult::bad(i, "scheme mismatch: not an instance of " +
                                         std::string(to_string(just.scheme)));
        break;
      }
      case Justification::Kind::TheoremScheme: {
        if (just.scheme == SchemeId::TND) {
          if (!t.tnd) return CheckResult::bad(i, "TND is not available in " + std::string(t.name));
          if (!is_tnd_instance(f)) return CheckResult::bad(i, "scheme mismatch: not a TND instance");
        } else if (just.scheme == SchemeId::SP) {
          if (!t.sp) return CheckResult::bad(i, "SP is not available in " + std::string(t.name));
          if (opt.strict_sp && logic != LogicId::L)
            return CheckResult::bad(i, "SP as a primitive line is restricted to L");
          if (!is_sp_instance(f)) return CheckResult::bad(i, "scheme mismatch: not an SP instance");
        } else {
          return CheckResult::bad(i, "unknown theorem scheme");
        }
        break;
      }
      case Justification::Kind::AN: {
        if (!t.an) return CheckResult::bad(i, "rule AN is not available in " + std::string(t.name));
        if (just.extra.empty() && (just.scheme == SchemeId::TND || just.scheme == SchemeId::SP))
          return CheckResult::bad(i, "AN on theorem scheme");
        if (f.conn() != Conn::Box) return CheckResult::bad(i, "AN line is not boxed");
        const Formula inner = f.child();
        if (!just.extra.empty()) {
          const Formula* pat = detail::basis_extra(basis, just.extra);
          if (!pat) return CheckResult::bad(i, "non-axiom cited by AN: " + just.extra);
          if (!detail::matches(*pat, inner))
            return CheckResult::bad(i, "scheme mismatch under AN: " + just.extra);
          break;
        }
        if (!detail::basis_has(basis, just.scheme))
          return CheckResult::bad(i, "non-axiom cited by AN: " + std::string(to_string(just.scheme)));
        if (!is_scheme_instance(just.scheme, inner))
          return CheckResult::bad(i, "scheme mismatch under AN: " +
                                         std::string(to_string(just.scheme)));
        break;
      }
      case Justification::Kind::MP: {
        if (just.i < 0 || just.i >= i || just.j < 0 || just.j >= i)
          return CheckResult::bad(i, "bad MP indices");
        const Formula& ante = d.lines[static_cast<size_t>(just.i)].formula;
        const Formula& impl = d.lines[static_cast<size_t>(just.j)].formula;
        if (impl.conn() != Conn::Imp || impl.left() != ante || impl.right() != f)
          return CheckResult::bad(i, "MP mismatch: line " + std::to_string(just.j + 1) +
                                         " is not (line " + std::to_string(just.i + 1) +
                                         " -> this line)");
        break;
      }
    }
  }
  return CheckResult::ok();
}

// ---------------------------------------------------------------------------
// Box lifting

// Shared engine: turns a derivation whose lines are hypotheses, axioms of the
// target, AN steps or MP steps into a derivation of the boxed conclusion from
// boxed hypotheses. Axiom lines become AN lines, AN lines are boxed through
// the 4-axiom, and MP steps go through an A3 and an A2 instance.
namespace detail {

class BoxTransform {
 public:
  // When a basis provides a plain distribution axiom named "DIST", MP steps
  // are expanded through it; otherwise through an A3 plus an A2 instance.
  explicit BoxTransform(const AxiomBasis* basis = nullptr) : basis_(basis) {}

  Derivation run(const Derivation& input) {
    const bool via_dist = basis_ && basis_extra(*basis_, "DIST") && !basis_has(*basis_, SchemeId::A3);
    Derivation out;
    for (const Formula& h : input.hypotheses) out.hypotheses.push_back(Formula::box(h));
    std::vector<int> lifted(input.lines.size(), -1);
    for (size_t i = 0; i < input.lines.size(); ++i) {
      const auto& [f, just] = input.lines[i];
      switch (just.kind) {
        case Justification::Kind::Hypothesis:
          lifted[i] = add(out, Formula::box(f), Justification::hyp());
          break;
        case Justification::Kind::Axiom: {
          Justification an = just.extra.empty() ? Justification::an(just.scheme)
                                                : Justification::an_extra(just.extra);
          lifted[i] = add(out, Formula::box(f), an);
          break;
        }
        case Justification::Kind::AN: {
          // f = box(psi) already proved; box it once more via the 4-axiom
          int prev = add(out, f, just);
          int a4 = add(out, Formula::imp(f, Formula::box(f)), Justification::ax(SchemeId::A4));
          lifted[i] = add(out, Formula::box(f), Justification::mp(prev, a4));
          break;
        }
        case Justification::Kind::MP: {
          const Formula a = input.lines[static_cast<size_t>(just.i)].formula;
          Formula ba = Formula::box(a), bf = Formula::box(f);
          Formula bimp = Formula::box(Formula::imp(a, f));
          Formula step = Formula::imp(ba, bf);
          int impstep;
          if (via_dist) {
            int t1 = add(out, Formula::imp(bimp, step), Justification::ax_extra("DIST"));
            impstep = add(out, step, Justification::mp(lifted[static_cast<size_t>(just.j)], t1));
          } else {
            int t1 = add(out, Formula::imp(bimp, Formula::box(step)), Justification::ax(SchemeId::A3));
            int t2 = add(out, Formula::box(step), Justification::mp(lifted[static_cast<size_t>(just.j)], t1));
            int t3 = add(out, Formula::imp(Formula::box(step), step), Justification::ax(SchemeId::A2));
            impstep = add(out, step, Justification::mp(t2, t3));
          }
          lifted[i] = add(out, bf, Justification::mp(lifted[static_cast<size_t>(just.i)], impstep));
          break;
        }
        default:
          throw std::invalid_argument("box lift: line " + std::to_string(i + 1) +
                                      " is not a hypothesis, axiom, AN or MP step");
      }
    }
    return out;
  }

 private:
  const AxiomBasis* basis_;

  static int add(Derivation& d, Formula f, Justification j) {
    d.lines.push_back({std::move(f), std::move(j)});
    return static_cast<int>(d.lines.size()) - 1;
  }
};

}  // namespace detail

// Lifts a purely implicational derivation (hypothesis / axiom / MP lines)
// into the target system: the result derives box(conclusion) from the boxed
// hypotheses. Every axiom cited by the input must be an axiom scheme of the
// target, so IPC-style derivations (INT lines only) lift into L5 and
// IEL-style derivations (INT, KBel, IntCo, IntRe) lift into EL5star.
inline Derivation box_lift(const Derivation& input, LogicId target) {
  if (target != LogicId::L5 && target != LogicId::EL5star)
    throw std::invalid_argument("box lift targets L5 or EL5star");
  const Language source_lang = target == LogicId::L5 ? Language::Fm0 : Language::FmE;
  for (const Formula& h : input.hypotheses)
    if (!h.in_language(source_lang))
      throw std::invalid_argument("box lift: hypothesis outside the source language");
  for (size_t i = 0; i < input.lines.size(); ++i) {
    const auto& [f, just] = input.lines[i];
    if (!f.in_language(source_lang))
      throw std::invalid_argument("box lift: line " + std::to_string(i + 1) +
                                  " outside the source language");
    if (just.kind == Justification::Kind::AN || !just.extra.empty())
      throw std::invalid_argument("box lift: unsupported justification on line " +
                                  std::to_string(i + 1));
    if (just.kind == Justification::Kind::Axiom && !detail::basis_has(default_basis(target), just.scheme))
      throw std::invalid_argument("box lift: line " + std::to_string(i + 1) + " cites " +
                                  to_string(just.scheme) + ", not an axiom of the target");
  }
  // the input must check on its own terms before lifting
  CheckResult r = check_derivation(target, input, {});
  if (!r.accepted)
    throw std::invalid_argument("box lift: input fails its own check at line " +
                                std::to_string(r.line + 1) + ": " + r.reason);
  return detail::BoxTransform().run(input);
}

// Boxes a theorem derivation that avoids TND and SP, in any logic (or custom
// basis) with the 4-axiom. Used for results of the form "if derivable
// without TND, then the boxed formula is derivable".
inline Derivation box_theorem(const Derivation& input, LogicId logic,
                              const AxiomBasis* basis = nullptr) {
  if (!basis && traits(logic).box_degree < 4)
    throw std::invalid_argument("box_theorem needs the 4-axiom");
  if (basis && !detail::basis_has(*basis, SchemeId::A4))
    throw std::invalid_argument("box_theorem needs the 4-axiom");
  if (!input.hypotheses.empty()) throw std::invalid_argument("box_theorem: no hypotheses allowed");
  return detail::BoxTransform(basis).run(input);
}

}  // namespace boxkit
