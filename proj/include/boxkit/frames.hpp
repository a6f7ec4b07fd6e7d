#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "boxkit/algebra.hpp"
#include "boxkit/calculi.hpp"
#include "boxkit/formula.hpp"
#include "boxkit/poset.hpp"

namespace boxkit {

// General frame: rooted partial order of worlds, an admissible family P of
// upper sets, and a belief filter per world. Filters over a finite P are
// principal, so E(w) is stored by its generator: E(w) = {A in P : egen[w] ⊆ A}.
// Only the S5-style systems (and the IEL families, read at the bottom world)
// have frames. The chain-upper-bound requirement on the order is vacuous at
// finite size and is not checked.
struct Frame {
  Poset order;
  std::vector<uint32_t> props;  // ascending upper-set masks
  std::vector<uint32_t> egen;   // per-world filter generator (a world mask)
  std::optional<int> wt;        // designated maximal world
  std::string id;

  int n() const { return order.n; }
  uint32_t full() const { return (1u << order.n) - 1; }
  int wbot() const { return order.root(); }

  bool in_E(int w, uint32_t a) const { return (egen[static_cast<size_t>(w)] & ~a) == 0; }

  // K A = the set of worlds where A is believed
  uint32_t k_of(uint32_t a) const {
    uint32_t out = 0;
    for (int w = 0; w < n(); ++w)
      if (in_E(w, a)) out |= 1u << w;
    return out;
  }

  uint32_t imp_of(uint32_t a, uint32_t b) const {
    uint32_t out = 0;
    for (int w = 0; w < n(); ++w)
      if ((order.up_mask(w) & a & ~b) == 0) out |= 1u << w;
    return out;
  }

  uint32_t box_of(uint32_t a) const { return (a >> wbot()) & 1 ? full() : 0; }

  int prop_index(uint32_t mask) const {
    auto it = std::lower_bound(props.begin(), props.end(), mask);
    if (it == props.end() || *it != mask) return -1;
    return static_cast<int>(it - props.begin());
  }

  uint32_t max_mask() const {
    uint32_t m = 0;
    for (int w : order.maximal()) m |= 1u << w;
    return m;
  }
};

struct RelationalModel {
  Frame frame;
  std::map<std::string, uint32_t> g;  // variable -> proposition (world mask)
};

// Inductive extension of the assignment to all formulas, as a world mask.
inline uint32_t extension(const RelationalModel& m, const Formula& f) {
  const Frame& fr = m.frame;
  switch (f.conn()) {
    case Conn::Var: {
      auto it = m.g.find(f.var_name());
      if (it == m.g.end()) throw std::invalid_argument("sat: unassigned variable " + f.var_name());
      return it->second;
    }
    case Conn::Bot: return 0;
    case Conn::And: return extension(m, f.left()) & extension(m, f.right());
    case Conn::Or: return extension(m, f.left()) | extension(m, f.right());
    case Conn::Imp: return fr.imp_of(extension(m, f.left()), extension(m, f.right()));
    case Conn::Box: return fr.box_of(extension(m, f.child()));
    case Conn::K: return fr.k_of(extension(m, f.child()));
  }
  throw std::logic_error("unreachable");
}

inline bool sat(const RelationalModel& m, int w, const Formula& f) {
  if (w < 0 || w >= m.frame.n()) throw std::out_of_range("sat: unknown world");
  return (extension(m, f) >> w) & 1;
}

// Truth in the model: at the designated maximal world when present, at the
// bottom world otherwise (the IEL reading).
inline bool true_in(const RelationalModel& m, const Formula& f) {
  return sat(m, m.frame.wt ? *m.frame.wt : m.frame.wbot(), f);
}

// Least family containing the empty set, the full set and the generators,
// closed under intersection, union, relative pseudo-complement and K (which
// is determined by the filter generators alone).
inline std::vector<uint32_t> close_propositions(const Poset& order,
                                                const std::vector<uint32_t>& egen,
                                                const std::vector<uint32_t>& generators) {
  Frame probe;
  probe.order = order;
  probe.egen = egen;
  std::vector<uint32_t> out = {0, (1u << order.n) - 1};
  for (uint32_t g : generators) {
    if (!order.is_upper_set(g)) throw std::invalid_argument("close_propositions: generator is not an upper set");
    out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  auto add = [&](uint32_t m, bool& changed) {
    auto it = std::lower_bound(out.begin(), out.end(), m);
    if (it == out.end() || *it != m) {
      out.insert(it, m);
      changed = true;
    }
  };
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<uint32_t> snap = out;
    for (uint32_t a : snap) {
      add(probe.k_of(a), changed);
      for (uint32_t b : snap) {
        add(a & b, changed);
        add(a | b, changed);
        add(probe.imp_of(a, b), changed);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Frame class checking

inline bool frame_class_exists(LogicId cls) {
  const LogicTraits& t = traits(model_class(cls));
  return t.box_degree == 5 || t.box_degree == 0;  // S5-style or IEL-style
}

inline Report check_frame(const Frame& f, LogicId cls_in) {
  const LogicId cls = model_class(cls_in);
  const LogicTraits& t = traits(cls);
  if (!frame_class_exists(cls))
    throw std::invalid_argument(std::string("no relational semantics for ") + to_string(cls));
  Report r;
  const bool iel_style = t.box_degree == 0;

  if (!f.order.valid() || !f.order.rooted()) {
    r.fail("world order is not a rooted partial order");
    return r;
  }
  if (f.egen.size() != static_cast<size_t>(f.n())) {
    r.fail("belief map has wrong arity");
    return r;
  }

  auto wname = [](int w) { return "w" + std::to_string(w); };
  auto aname = [](uint32_t a) { return "A=" + std::to_string(a); };

  bool has_bot = false, has_top = false;
  for (uint32_t a : f.props) {
    if (!f.order.is_upper_set(a)) r.fail("proposition is not an upper set: " + aname(a));
    has_bot = has_bot || a == 0;
    has_top = has_top || a == f.full();
  }
  if (!has_bot) r.fail("empty proposition missing from P");
  if (!has_top) r.fail("full proposition missing from P");
  for (uint32_t a : f.props) {
    if (f.prop_index(f.k_of(a)) < 0) r.fail("P not closed under K at " + aname(a));
    for (uint32_t b : f.props) {
      if (f.prop_index(a & b) < 0) r.fail("P not closed under intersection at " + aname(a));
      if (f.prop_index(a | b) < 0) r.fail("P not closed under union at " + aname(a));
      if (f.prop_index(f.imp_of(a, b)) < 0)
        r.fail("P not closed under implication at (" + aname(a) + "," + aname(b) + ")");
    }
  }

  // monotonicity of E along the order
  for (int w = 0; w < f.n(); ++w)
    for (int v = 0; v < f.n(); ++v)
      if (f.order.leq(w, v))
        for (uint32_t a : f.props)
          if (f.in_E(w, a) && !f.in_E(v, a))
            r.fail("E not monotone: " + aname(a) + " believed at " + wname(w) + " but not at " +
                   wname(v));

  if (!iel_style) {
    if (!f.wt) {
      r.fail("designated maximal world missing");
      return r;
    }
    bool is_max = true;
    for (int v = 0; v < f.n(); ++v)
      if (v != *f.wt && f.order.leq(*f.wt, v)) is_max = false;
    if (!is_max) r.fail("designated world is not maximal");
  }

  const uint32_t maxes = f.max_mask();
  const KGroup kg = t.kgroup;
  for (int w = 0; w < f.n(); ++w) {
    const uint32_t rw = f.order.up_mask(w);
    for (uint32_t a : f.props) {
      if ((kg == KGroup::E4 || kg == KGroup::E5) && f.in_E(w, a) && !f.in_E(w, f.k_of(a)))
        r.fail("positive introspection fails at (" + wname(w) + "," + aname(a) + ")");
      if (kg == KGroup::E5) {
        bool nowhere = true;
        for (int v = 0; v < f.n(); ++v)
          if ((rw >> v) & 1 && f.in_E(v, a)) nowhere = false;
        if (nowhere && !f.in_E(w, f.imp_of(f.k_of(a), 0)))
          r.fail("negative introspection fails at (" + wname(w) + "," + aname(a) + ")");
      }
      if (t.knowledge && f.in_E(w, a) && (maxes & rw & ~a) != 0)
        r.fail("knowledge condition fails at (" + wname(w) + "," + aname(a) + ")");
      if (t.intco && ((a >> w) & 1) && !f.in_E(w, a))
        r.fail("co-reflection condition fails at (" + wname(w) + "," + aname(a) + ")");
    }
  }
  if (kg == KGroup::E6) {
    for (int w = 1; w < f.n(); ++w)
      for (uint32_t a : f.props)
        if (f.in_E(w, a) != f.in_E(0, a))
          r.fail("belief sets differ across worlds at " + aname(a));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Frame enumeration: full power set of upper sets as P, every antitone
// generator assignment (proper filters only), every designated maximal world.
inline void enumerate_frames(LogicId cls_in, int max_worlds,
                             const std::function<bool(const Frame&)>& sink) {
  const LogicId cls = model_class(cls_in);
  const LogicTraits& t = traits(cls);
  if (!frame_class_exists(cls))
    throw std::invalid_argument(std::string("no relational semantics for ") + to_string(cls));
  const bool iel_style = t.box_degree == 0;
  const bool epistemic = t.kgroup != KGroup::None;
  bool stop = false;

  std::vector<Poset> posets = rooted_posets(max_worlds);
  for (size_t pi = 0; pi < posets.size() && !stop; ++pi) {
    const Poset& p = posets[pi];
    Frame base;
    base.order = p;
    base.props = p.upper_sets();
    const uint32_t maxes = [&] {
      uint32_t m = 0;
      for (int w : p.maximal()) m |= 1u << w;
      return m;
    }();

    // candidate generators per world, already filtered by the unary class
    // conditions; the antitone constraint is enforced during the product
    std::vector<std::vector<uint32_t>> cand(static_cast<size_t>(p.n));
    for (int w = 0; w < p.n; ++w) {
      for (uint32_t a : base.props) {
        if (a == 0) continue;  // improper filters are not enumerated
        if (!epistemic && a != base.full()) continue;  // no K: only the trivial filter
        if (t.knowledge && (maxes & p.up_mask(w) & ~a) != 0) continue;
        if (t.intco && (a & ~p.up_mask(w)) != 0) continue;
        cand[static_cast<size_t>(w)].push_back(a);
      }
    }

    std::vector<uint32_t> egen(static_cast<size_t>(p.n), 0);
    long counter = 0;
    std::function<void(int)> assign = [&](int w) {
      if (stop) return;
      if (w == p.n) {
        if (t.kgroup == KGroup::E6) {
          for (int v = 1; v < p.n; ++v)
            if (egen[static_cast<size_t>(v)] != egen[0]) return;
        }
        Frame f = base;
        f.egen = egen;
        std::vector<std::optional<int>> wts;
        if (iel_style) wts.emplace_back(std::nullopt);
        else
          for (int m : p.maximal()) wts.emplace_back(m);
        for (const auto& wt : wts) {
          Frame g = f;
          g.wt = wt;
          if (!check_frame(g, cls).pass) continue;  // E4/E5 closure pruning is partial
          std::ostringstream os;
          os << to_string(cls) << "/P" << pi << "/E" << counter;
          if (wt) os << "/T" << *wt;
          g.id = os.str();
          if (!sink(g)) {
            stop = true;
            return;
          }
        }
        ++counter;
        return;
      }
      for (uint32_t a : cand[static_cast<size_t>(w)]) {
        bool ok = true;
        for (int v = 0; v < w && ok; ++v) {
          // v R w forces E(v) ⊆ E(w), i.e. the generator shrinks upward
          if (p.leq(v, w) && (a & ~egen[static_cast<size_t>(v)]) != 0) ok = false;
          if (p.leq(w, v) && (egen[static_cast<size_t>(v)] & ~a) != 0) ok = false;
        }
        if (!ok) continue;
        egen[static_cast<size_t>(w)] = a;
        assign(w + 1);
      }
      egen[static_cast<size_t>(w)] = 0;
    };
    assign(0);
  }
}

inline std::vector<Frame> collect_frames(LogicId cls, int max_worlds) {
  std::vector<Frame> out;
  enumerate_frames(cls, max_worlds, [&](const Frame& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

}  // namespace boxkit
