#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "boxkit/formula.hpp"
#include "boxkit/poset.hpp"
#include "boxkit/print.hpp"

namespace boxkit {

// Finite rooted intuitionistic Kripke model. The valuation is persistent:
// w <= w' implies val(w) is a subset of val(w').
struct KripkeModel {
  int n = 0;
  std::vector<std::vector<uint8_t>> leq;       // leq[i][j]: world i below world j
  std::vector<std::set<std::string>> val;      // variables true at each world
  int root = 0;

  bool below(int i, int j) const { return leq[i][j] != 0; }
};

inline bool eval_kripke(const KripkeModel& m, int w, const Formula& f) {
  if (w < 0 || w >= m.n) throw std::out_of_range("eval_kripke: unknown world");
  switch (f.conn()) {
    case Conn::Var: return m.val[w].count(f.var_name()) != 0;
    case Conn::Bot: return false;
    case Conn::And: return eval_kripke(m, w, f.left()) && eval_kripke(m, w, f.right());
    case Conn::Or: return eval_kripke(m, w, f.left()) || eval_kripke(m, w, f.right());
    case Conn::Imp:
      for (int v = 0; v < m.n; ++v)
        if (m.below(w, v) && eval_kripke(m, v, f.left()) && !eval_kripke(m, v, f.right()))
          return false;
      return true;
    case Conn::Box:
    case Conn::K: throw std::invalid_argument("eval_kripke: modal operator outside Fm0");
  }
  return false;
}

struct IpcVerdict {
  bool theorem = false;
  std::string trace;                  // derivation trace when theorem
  std::optional<KripkeModel> counter; // refutes the goal at its root otherwise
};

namespace detail {

// Decision procedure for derivability in intuitionistic propositional logic,
// by backward search in a contraction-free sequent calculus (implications on
// the left are analysed by the shape of their antecedent, so no loop check is
// needed). Countermodels are not read off failed branches directly; instead,
// once the goal is known underivable, a finite rooted model is grown from
// prime saturated theories over the subformula closure, using derivability
// itself as the saturation test. That keeps the refutation argument local:
// every world is a deductively closed prime set, implications not in a world
// always get a dedicated successor refuting their conclusion.
class IpcSolver {
 public:
  int intern(const Formula& f) {
    auto it = ids_.find(f);
    if (it != ids_.end()) return it->second;
    Ent e;
    e.c = f.conn();
    if (f.is_var()) e.name = f.var_name();
    else if (f.conn() != Conn::Bot) {
      e.l = intern(f.left());
      if (f.conn() == Conn::And || f.conn() == Conn::Or || f.conn() == Conn::Imp)
        e.r = intern(f.right());
    }
    int id = static_cast<int>(ents_.size());
    ents_.push_back(std::move(e));
    ids_.emplace(f, id);
    return id;
  }

  bool provable(const std::vector<int>& gamma, int goal) {
    std::vector<int> g = gamma;
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return prove(std::move(g), goal);
  }

  bool provable(const std::vector<Formula>& hyps, const Formula& goal) {
    std::vector<int> g;
    g.reserve(hyps.size());
    for (const auto& h : hyps) g.push_back(intern(h));
    return provable(g, intern(goal));
  }

  // Builds the countermodel; requires that (hyps, goal) is underivable.
  KripkeModel countermodel(const std::vector<Formula>& hyps, const Formula& goal);

  std::string trace(const std::vector<Formula>& hyps, const Formula& goal);

 private:
  struct Ent {
    Conn c = Conn::Bot;
    int l = -1, r = -1;
    std::string name;
  };

  struct SeqHash {
    size_t operator()(const std::pair<std::vector<int>, int>& s) const {
      size_t h = static_cast<size_t>(s.second) * 0x9e3779b97f4a7c15ull;
      for (int x : s.first) h = h * 1099511628211ull + static_cast<size_t>(x) + 1;
      return h;
    }
  };

  std::vector<Ent> ents_;
  std::unordered_map<Formula, int, FormulaHash> ids_;
  std::unordered_map<std::pair<std::vector<int>, int>, bool, SeqHash> memo_;

  int mk(Conn c, int l, int r) {
    for (size_t i = 0; i < ents_.size(); ++i)
      if (ents_[i].c == c && ents_[i].l == l && ents_[i].r == r && ents_[i].name.empty())
        return static_cast<int>(i);
    Ent e;
    e.c = c;
    e.l = l;
    e.r = r;
    ents_.push_back(e);
    return static_cast<int>(ents_.size()) - 1;
  }

  static void insert_sorted(std::vector<int>& v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) v.insert(it, x);
  }
  static void erase_sorted(std::vector<int>& v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x) v.erase(it);
  }
  static bool contains(const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
  }

  bool prove(std::vector<int> gamma, int goal);

  void subformulas(int id, std::set<int>& out) {
    if (!out.insert(id).second) return;
    const Ent& e = ents_[id];
    if (e.l >= 0) subformulas(e.l, out);
    if (e.r >= 0) subformulas(e.r, out);
  }

  // Closes theta under derivability and primes disjunctions while keeping the
  // refuted formula underivable. Both loops only ever add members of sub.
  std::vector<int> saturate(std::vector<int> theta, int refuted, const std::vector<int>& sub) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int y : sub) {
        if (!contains(theta, y) && prove(theta, y)) {
          insert_sorted(theta, y);
          changed = true;
        }
      }
      for (size_t i = 0; i < theta.size(); ++i) {
        if (ents_[theta[i]].c != Conn::Or) continue;
        const int l = ents_[theta[i]].l, r = ents_[theta[i]].r;
        if (contains(theta, l) || contains(theta, r)) continue;
        std::vector<int> with_l = theta;
        insert_sorted(with_l, l);
        insert_sorted(theta, prove(with_l, refuted) ? r : l);
        changed = true;
      }
    }
    assert(!prove(theta, refuted));
    return theta;
  }

  std::string trace_go(std::vector<int> gamma, int goal, int depth);
  std::string txt(int id) const;
};

inline bool IpcSolver::prove(std::vector<int> gamma, int goal) {
  // Axioms and invertible rules, applied until none fires.
  for (bool changed = true; changed;) {
    changed = false;
    if (contains(gamma, goal)) return true;
    for (size_t i = 0; i < gamma.size(); ++i) {
      const Ent& e = ents_[gamma[i]];
      if (e.c == Conn::Bot) return true;
      if (e.c == Conn::And) {
        int id = gamma[i];
        erase_sorted(gamma, id);
        insert_sorted(gamma, e.l);
        insert_sorted(gamma, e.r);
        changed = true;
        break;
      }
      if (e.c == Conn::Imp) {
        const int ant = e.l, con = e.r, id = gamma[i];
        const Conn ac = ents_[ant].c;
        const int al = ents_[ant].l, ar = ents_[ant].r;
        if (ac == Conn::Bot) {
          erase_sorted(gamma, id);
          changed = true;
          break;
        }
        if (ac == Conn::And) {
          erase_sorted(gamma, id);
          int inner = mk(Conn::Imp, ar, con);
          insert_sorted(gamma, mk(Conn::Imp, al, inner));
          changed = true;
          break;
        }
        if (ac == Conn::Or) {
          erase_sorted(gamma, id);
          insert_sorted(gamma, mk(Conn::Imp, al, con));
          insert_sorted(gamma, mk(Conn::Imp, ar, con));
          changed = true;
          break;
        }
        if (ac == Conn::Var && contains(gamma, ant)) {
          erase_sorted(gamma, id);
          insert_sorted(gamma, con);
          changed = true;
          break;
        }
      }
    }
  }

  auto key = std::make_pair(gamma, goal);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  memo_.emplace(key, false);  // placeholder; overwritten below

  auto done = [&](bool r) {
    memo_[key] = r;
    return r;
  };

  // Branching left disjunction (invertible, two premises).
  for (int id : gamma) {
    const Ent& e = ents_[id];
    if (e.c == Conn::Or) {
      std::vector<int> g1 = gamma, g2 = gamma;
      erase_sorted(g1, id);
      insert_sorted(g1, e.l);
      erase_sorted(g2, id);
      insert_sorted(g2, e.r);
      return done(prove(std::move(g1), goal) && prove(std::move(g2), goal));
    }
  }

  // Invertible right rules.
  const Ent& ge = ents_[goal];
  if (ge.c == Conn::And)
    return done(prove(gamma, ge.l) && prove(gamma, ge.r));
  if (ge.c == Conn::Imp) {
    std::vector<int> g = gamma;
    insert_sorted(g, ge.l);
    return done(prove(std::move(g), ge.r));
  }

  // Choice points: right disjunction, and implications whose antecedent is
  // itself an implication.
  if (ge.c == Conn::Or) {
    if (prove(gamma, ge.l) || prove(gamma, ge.r)) return done(true);
  }
  for (int id : gamma) {
    if (ents_[id].c != Conn::Imp || ents_[ents_[id].l].c != Conn::Imp) continue;
    const int ant = ents_[id].l, con = ents_[id].r;  // (x -> y) -> con
    const int ar = ents_[ant].r;
    std::vector<int> g1 = gamma;
    erase_sorted(g1, id);
    insert_sorted(g1, mk(Conn::Imp, ar, con));
    if (prove(std::move(g1), ant)) {
      std::vector<int> g2 = gamma;
      erase_sorted(g2, id);
      insert_sorted(g2, con);
      if (prove(std::move(g2), goal)) return done(true);
    }
  }
  return done(false);
}

inline KripkeModel IpcSolver::countermodel(const std::vector<Formula>& hyps, const Formula& goal) {
  std::vector<int> base;
  for (const auto& h : hyps) base.push_back(intern(h));
  int goal_id = intern(goal);
  std::set<int> sub_set;
  for (int h : base) subformulas(h, sub_set);
  subformulas(goal_id, sub_set);
  std::vector<int> sub(sub_set.begin(), sub_set.end());

  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  if (prove(base, goal_id)) throw std::logic_error("countermodel requested for a derivable sequent");

  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> worlds;
  std::vector<int> queue;
  auto add_world = [&](std::vector<int> theta) {
    auto it = index.find(theta);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(worlds.size());
    index.emplace(theta, id);
    worlds.push_back(std::move(theta));
    queue.push_back(id);
    return id;
  };

  add_world(saturate(base, goal_id, sub));
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<int> theta = worlds[queue[qi]];
    for (int y : sub) {
      const Ent& e = ents_[y];
      if (e.c != Conn::Imp || contains(theta, y)) continue;
      std::vector<int> start = theta;
      insert_sorted(start, e.l);
      std::vector<int> child = saturate(std::move(start), e.r, sub);
      if (child != theta) add_world(std::move(child));
    }
  }

  KripkeModel m;
  m.n = static_cast<int>(worlds.size());
  m.root = 0;
  m.leq.assign(m.n, std::vector<uint8_t>(m.n, 0));
  m.val.resize(m.n);
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j)
      m.leq[i][j] = std::includes(worlds[j].begin(), worlds[j].end(),
                                  worlds[i].begin(), worlds[i].end());
    for (int y : worlds[i])
      if (ents_[y].c == Conn::Var) m.val[i].insert(ents_[y].name);
  }
  return m;
}

inline std::string IpcSolver::txt(int id) const {
  const Ent& e = ents_[id];
  switch (e.c) {
    case Conn::Var: return e.name;
    case Conn::Bot: return "_|_";
    case Conn::And: return "(" + txt(e.l) + " & " + txt(e.r) + ")";
    case Conn::Or: return "(" + txt(e.l) + " | " + txt(e.r) + ")";
    case Conn::Imp: return "(" + txt(e.l) + " -> " + txt(e.r) + ")";
    default: return "?";
  }
}

// Reconstructs one successful derivation, using the memo table to pick
// branches that are already known to close. Only called on derivable inputs.
inline std::string IpcSolver::trace_go(std::vector<int> gamma, int goal, int depth) {
  std::string pad(2 * static_cast<size_t>(depth), ' ');
  std::sort(gamma.begin(), gamma.end());
  gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());

  for (bool changed = true; changed;) {
    changed = false;
    if (contains(gamma, goal)) return pad + "axiom " + txt(goal) + "\n";
    for (size_t i = 0; i < gamma.size(); ++i) {
      const Ent& e = ents_[gamma[i]];
      if (e.c == Conn::Bot) return pad + "ex-falso\n";
      if (e.c == Conn::And) {
        int id = gamma[i];
        erase_sorted(gamma, id);
        insert_sorted(gamma, e.l);
        insert_sorted(gamma, e.r);
        changed = true;
        break;
      }
      if (e.c == Conn::Imp) {
        const int ant = e.l, con = e.r, id = gamma[i];
        const Conn ac = ents_[ant].c;
        const int al = ents_[ant].l, ar = ents_[ant].r;
        if (ac == Conn::Bot) { erase_sorted(gamma, id); changed = true; break; }
        if (ac == Conn::And) {
          erase_sorted(gamma, id);
          int inner = mk(Conn::Imp, ar, con);
          insert_sorted(gamma, mk(Conn::Imp, al, inner));
          changed = true;
          break;
        }
        if (ac == Conn::Or) {
          erase_sorted(gamma, id);
          insert_sorted(gamma, mk(Conn::Imp, al, con));
          insert_sorted(gamma, mk(Conn::Imp, ar, con));
          changed = true;
          break;
        }
        if (ac == Conn::Var && contains(gamma, ant)) {
          erase_sorted(gamma, id);
          insert_sorted(gamma, con);
          changed = true;
          break;
        }
      }
    }
  }

  for (int id : gamma) {
    const Ent& e = ents_[id];
    if (e.c == Conn::Or) {
      std::vector<int> g1 = gamma, g2 = gamma;
      erase_sorted(g1, id);
      insert_sorted(g1, e.l);
      erase_sorted(g2, id);
      insert_sorted(g2, e.r);
      return pad + "case " + txt(id) + "\n" + trace_go(g1, goal, depth + 1) +
             trace_go(g2, goal, depth + 1);
    }
  }
  const Ent& ge = ents_[goal];
  if (ge.c == Conn::And)
    return pad + "split " + txt(goal) + "\n" + trace_go(gamma, ge.l, depth + 1) +
           trace_go(gamma, ge.r, depth + 1);
  if (ge.c == Conn::Imp) {
    std::vector<int> g = gamma;
    insert_sorted(g, ge.l);
    return pad + "assume " + txt(ge.l) + "\n" + trace_go(g, ge.r, depth + 1);
  }
  if (ge.c == Conn::Or) {
    if (prove(gamma, ge.l))
      return pad + "left\n" + trace_go(gamma, ge.l, depth + 1);
    if (prove(gamma, ge.r))
      return pad + "right\n" + trace_go(gamma, ge.r, depth + 1);
  }
  for (int id : gamma) {
    if (ents_[id].c != Conn::Imp || ents_[ents_[id].l].c != Conn::Imp) continue;
    const int ant = ents_[id].l, con = ents_[id].r;
    const int ar = ents_[ant].r;
    std::vector<int> g1 = gamma;
    erase_sorted(g1, id);
    insert_sorted(g1, mk(Conn::Imp, ar, con));
    if (prove(g1, ant)) {
      std::vector<int> g2 = gamma;
      erase_sorted(g2, id);
      insert_sorted(g2, con);
      if (prove(g2, goal))
        return pad + "use " + txt(id) + "\n" + trace_go(g1, ant, depth + 1) +
               trace_go(g2, goal, depth + 1);
    }
  }
  throw std::logic_error("trace requested for an underivable sequent");
}

inline std::string IpcSolver::trace(const std::vector<Formula>& hyps, const Formula& goal) {
  std::vector<int> g;
  for (const auto& h : hyps) g.push_back(intern(h));
  return trace_go(std::move(g), intern(goal), 0);
}

// Pointwise forcing over a poset with one upper-set mask per variable.
inline uint32_t force_set(const Poset& p, const std::map<std::string, uint32_t>& val,
                          const Formula& f) {
  switch (f.conn()) {
    case Conn::Var: {
      auto it = val.find(f.var_name());
      return it == val.end() ? 0 : it->second;
    }
    case Conn::Bot: return 0;
    case Conn::And: return force_set(p, val, f.left()) & force_set(p, val, f.right());
    case Conn::Or: return force_set(p, val, f.left()) | force_set(p, val, f.right());
    case Conn::Imp: {
      uint32_t a = force_set(p, val, f.left());
      uint32_t b = force_set(p, val, f.right());
      uint32_t out = 0;
      for (int w = 0; w < p.n; ++w)
        if ((p.up_mask(w) & a & ~b) == 0) out |= 1u << w;
      return out;
    }
    default: throw std::invalid_argument("force_set: not an Fm0 formula");
  }
}

// Smallest-first refutation search over rooted posets of up to max_n worlds.
inline std::optional<KripkeModel> small_countermodel(const std::vector<Formula>& hyps,
                                                     const Formula& goal, int max_n) {
  std::set<std::string> vs = goal.vars();
  for (const auto& h : hyps) h.collect_vars(vs);
  std::vector<std::string> vars(vs.begin(), vs.end());
  for (const Poset& p : rooted_posets(max_n)) {
    const int root = p.root();
    const std::vector<uint32_t> uppers = p.upper_sets();
    std::vector<size_t> pick(vars.size(), 0);
    for (;;) {
      std::map<std::string, uint32_t> val;
      for (size_t i = 0; i < vars.size(); ++i) val[vars[i]] = uppers[pick[i]];
      bool ok = true;
      for (const auto& h : hyps)
        if (!(force_set(p, val, h) & (1u << root))) { ok = false; break; }
      if (ok && !(force_set(p, val, goal) & (1u << root))) {
        KripkeModel m;
        m.n = p.n;
        m.root = root;
        m.leq.assign(m.n, std::vector<uint8_t>(m.n, 0));
        m.val.resize(m.n);
        for (int i = 0; i < m.n; ++i)
          for (int j = 0; j < m.n; ++j) m.leq[i][j] = p.leq(i, j);
        for (const auto& [x, mask] : val)
          for (int w = 0; w < m.n; ++w)
            if (mask & (1u << w)) m.val[w].insert(x);
        return m;
      }
      size_t i = 0;
      for (; i < vars.size(); ++i) {
        if (++pick[i] < uppers.size()) break;
        pick[i] = 0;
      }
      if (i == vars.size()) break;
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Total decision procedure for intuitionistic consequence on Fm0 formulas.
// A NonTheorem verdict carries a finite rooted countermodel whose root
// satisfies every hypothesis and refutes the goal. Small witnesses are
// preferred: models with up to 3 worlds are tried exhaustively before the
// saturation construction takes over.
inline IpcVerdict decide_ipc(const std::vector<Formula>& hypotheses, const Formula& goal) {
  for (const auto& h : hypotheses)
    if (!h.in_language(Language::Fm0)) throw std::invalid_argument("decide_ipc: hypothesis outside Fm0");
  if (!goal.in_language(Language::Fm0)) throw std::invalid_argument("decide_ipc: goal outside Fm0");
  detail::IpcSolver solver;
  IpcVerdict v;
  if (solver.provable(hypotheses, goal)) {
    v.theorem = true;
    v.trace = solver.trace(hypotheses, goal);
    return v;
  }
  std::set<std::string> vs = goal.vars();
  for (const auto& h : hypotheses) h.collect_vars(vs);
  if (vs.size() <= 3) {
    if (auto m = detail::small_countermodel(hypotheses, goal, 3)) {
      v.counter = std::move(*m);
      return v;
    }
  }
  v.counter = solver.countermodel(hypotheses, goal);
  return v;
}

// Fast theoremhood check (no countermodel or trace construction).
inline bool ipc_theorem(const std::vector<Formula>& hypotheses, const Formula& goal) {
  detail::IpcSolver solver;
  return solver.provable(hypotheses, goal);
}

}  // namespace boxkit
