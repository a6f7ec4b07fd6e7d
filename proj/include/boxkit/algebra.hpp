#pragma once

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "boxkit/calculi.hpp"
#include "boxkit/formula.hpp"
#include "boxkit/poset.hpp"

namespace boxkit {

// Finite Heyting algebra with explicit operation tables. Carrier indices are
// 0..n-1; filters and other element sets travel as 64-bit masks (n <= 32 at
// desk scale). Algebras built from a poset keep the poset and the upper-set
// mask of every element around.
struct HeytingAlgebra {
  int n = 0;
  std::vector<uint8_t> leq_t;                  // n*n
  std::vector<uint8_t> meet_t, join_t, imp_t;  // n*n
  int bot = -1, top = -1;
  Poset base;                  // generating poset (worlds); empty when loaded
  std::vector<uint32_t> elem;  // element upper-set masks, parallel to carrier

  bool le(int a, int b) const { return leq_t[static_cast<size_t>(a) * n + b] != 0; }
  int meet(int a, int b) const { return meet_t[static_cast<size_t>(a) * n + b]; }
  int join(int a, int b) const { return join_t[static_cast<size_t>(a) * n + b]; }
  int imp(int a, int b) const { return imp_t[static_cast<size_t>(a) * n + b]; }
  int neg(int a) const { return imp(a, bot); }

  bool has_disjunction_property() const {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (join(a, b) == top && a != top && b != top) return false;
    return true;
  }
};

// The algebra of upper sets of a poset: meet and join are intersection and
// union, implication is the relative pseudo-complement computed pointwise.
inline HeytingAlgebra upperset_algebra(const Poset& p) {
  if (!p.valid()) throw std::invalid_argument("upperset_algebra: invalid poset matrix");
  HeytingAlgebra h;
  h.base = p;
  h.elem = p.upper_sets();
  h.n = static_cast<int>(h.elem.size());
  std::map<uint32_t, int> idx;
  for (int i = 0; i < h.n; ++i) idx[h.elem[static_cast<size_t>(i)]] = i;
  h.bot = idx.at(0);
  h.top = idx.at((1u << p.n) - 1);
  const size_t nn = static_cast<size_t>(h.n) * h.n;
  h.leq_t.assign(nn, 0);
  h.meet_t.assign(nn, 0);
  h.join_t.assign(nn, 0);
  h.imp_t.assign(nn, 0);
  for (int a = 0; a < h.n; ++a) {
    for (int b = 0; b < h.n; ++b) {
      uint32_t A = h.elem[static_cast<size_t>(a)], B = h.elem[static_cast<size_t>(b)];
      size_t at = static_cast<size_t>(a) * h.n + b;
      h.leq_t[at] = (A & ~B) == 0;
      h.meet_t[at] = static_cast<uint8_t>(idx.at(A & B));
      h.join_t[at] = static_cast<uint8_t>(idx.at(A | B));
      uint32_t im = 0;
      for (int w = 0; w < p.n; ++w)
        if ((p.up_mask(w) & A & ~B) == 0) im |= 1u << w;
      h.imp_t[at] = static_cast<uint8_t>(idx.at(im));
    }
  }
  return h;
}

// Rebuilds the operation tables from a bare order matrix; rejects inputs
// that are not bounded distributive residuated lattices.
inline HeytingAlgebra algebra_from_leq(int n, const std::vector<uint8_t>& leq) {
  HeytingAlgebra h;
  h.n = n;
  h.leq_t = leq;
  if (n <= 0 || leq.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("algebra_from_leq: bad matrix size");
  Poset check;
  check.n = n;
  check.mat = leq;
  if (!check.valid()) throw std::invalid_argument("algebra_from_leq: not a partial order");
  const size_t nn = static_cast<size_t>(n) * n;
  h.meet_t.assign(nn, 0);
  h.join_t.assign(nn, 0);
  h.imp_t.assign(nn, 0);
  auto glb = [&](auto&& below) -> int {
    int best = -1;
    for (int c = 0; c < n; ++c) {
      if (!below(c)) continue;
      if (best < 0 || h.le(best, c)) best = c;
    }
    if (best < 0) return -1;
    for (int c = 0; c < n; ++c)
      if (below(c) && !h.le(c, best)) return -1;
    return best;
  };
  for (int a = 0; a < n; ++a) {
    int cnt_below = 0, cnt_above = 0;
    for (int c = 0; c < n; ++c) {
      cnt_below += h.le(a, c);
      cnt_above += h.le(c, a);
    }
    if (cnt_below == n) h.bot = a;
    if (cnt_above == n) h.top = a;
  }
  if (h.bot < 0 || h.top < 0) throw std::invalid_argument("algebra_from_leq: not bounded");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int m = glb([&](int c) { return h.le(c, a) && h.le(c, b); });
      if (m < 0) throw std::invalid_argument("algebra_from_leq: meets missing");
      h.meet_t[static_cast<size_t>(a) * n + b] = static_cast<uint8_t>(m);
      int best = -1;  // least upper bound
      for (int c = 0; c < n; ++c) {
        if (!(h.le(a, c) && h.le(b, c))) continue;
        if (best < 0 || h.le(c, best)) best = c;
      }
      for (int c = 0; c < n; ++c)
        if (h.le(a, c) && h.le(b, c) && !h.le(best, c)) best = -1;
      if (best < 0) throw std::invalid_argument("algebra_from_leq: joins missing");
      h.join_t[static_cast<size_t>(a) * n + b] = static_cast<uint8_t>(best);
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int best = -1;  // greatest c with c/\a <= b
      for (int c = 0; c < n; ++c) {
        if (!h.le(h.meet(c, a), b)) continue;
        if (best < 0 || h.le(best, c)) best = c;
      }
      for (int c = 0; c < n; ++c)
        if (h.le(h.meet(c, a), b) && !h.le(c, best)) best = -1;
      if (best < 0) throw std::invalid_argument("algebra_from_leq: not residuated");
      h.imp_t[static_cast<size_t>(a) * n + b] = static_cast<uint8_t>(best);
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (h.meet(a, h.join(b, c)) != h.join(h.meet(a, b), h.meet(a, c)))
          throw std::invalid_argument("algebra_from_leq: not distributive");
        if (h.le(h.meet(a, b), c) != h.le(a, h.imp(b, c)))
          throw std::invalid_argument("algebra_from_leq: residuation fails");
      }
  return h;
}

// In a finite lattice every filter is the up-set of its least element, so the
// enumeration is by generator: filters[i] corresponds to generator i.
struct FilterSets {
  std::vector<uint64_t> filters;      // all up-sets, by generator index
  std::vector<uint64_t> proper;      // excludes the full algebra
  std::vector<uint64_t> prime;       // generator join-prime
  std::vector<uint64_t> ultra;       // generator an atom
  std::vector<int> prime_gen;        // generators of the prime filters
};

inline uint64_t upset_mask(const HeytingAlgebra& h, int a) {
  uint64_t m = 0;
  for (int b = 0; b < h.n; ++b)
    if (h.le(a, b)) m |= 1ull << b;
  return m;
}

inline bool join_prime(const HeytingAlgebra& h, int a) {
  if (a == h.bot) return false;
  for (int x = 0; x < h.n; ++x)
    for (int y = 0; y < h.n; ++y)
      if (h.le(a, h.join(x, y)) && !h.le(a, x) && !h.le(a, y)) return false;
  return true;
}

inline bool is_atom(const HeytingAlgebra& h, int a) {
  if (a == h.bot) return false;
  for (int b = 0; b < h.n; ++b)
    if (b != h.bot && b != a && h.le(b, a)) return false;
  return true;
}

inline FilterSets algebra_filters(const HeytingAlgebra& h) {
  FilterSets fs;
  for (int a = 0; a < h.n; ++a) {
    uint64_t f = upset_mask(h, a);
    fs.filters.push_back(f);
    if (a != h.bot) fs.proper.push_back(f);
    if (join_prime(h, a)) {
      fs.prime.push_back(f);
      fs.prime_gen.push_back(a);
    }
    if (is_atom(h, a)) fs.ultra.push_back(f);
  }
  return fs;
}

inline bool filter_mask_is_ultra(const HeytingAlgebra& h, uint64_t mask) {
  for (uint64_t u : algebra_filters(h).ultra)
    if (u == mask) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Models

using Assignment = std::map<std::string, int>;

struct AlgebraicModel {
  HeytingAlgebra alg;
  LogicId cls = LogicId::L5;
  std::optional<uint64_t> true_filter;     // absent for the IEL classes
  std::optional<std::vector<int>> box_t;   // absent for the IEL classes
  std::optional<std::vector<int>> k_t;     // absent for the non-epistemic logics
  std::string id;

  bool in_true(int m) const { return true_filter && (*true_filter >> m) & 1; }
  int box(int m) const { return (*box_t)[static_cast<size_t>(m)]; }
  int k(int m) const { return (*k_t)[static_cast<size_t>(m)]; }

  // believed propositions: k(m) classically true (k(m) = top in IEL mode)
  uint64_t bel() const {
    uint64_t out = 0;
    for (int m = 0; m < alg.n; ++m) {
      int km = k(m);
      bool b = true_filter ? in_true(km) : km == alg.top;
      if (b) out |= 1ull << m;
    }
    return out;
  }
};

inline int eval(const AlgebraicModel& m, const Assignment& g, const Formula& f) {
  switch (f.conn()) {
    case Conn::Var: {
      auto it = g.find(f.var_name());
      if (it == g.end()) throw std::invalid_argument("eval: unassigned variable " + f.var_name());
      return it->second;
    }
    case Conn::Bot: return m.alg.bot;
    case Conn::And: return m.alg.meet(eval(m, g, f.left()), eval(m, g, f.right()));
    case Conn::Or: return m.alg.join(eval(m, g, f.left()), eval(m, g, f.right()));
    case Conn::Imp: return m.alg.imp(eval(m, g, f.left()), eval(m, g, f.right()));
    case Conn::Box:
      if (!m.box_t) throw std::invalid_argument("eval: model has no box operation");
      return m.box(eval(m, g, f.child()));
    case Conn::K:
      if (!m.k_t) throw std::invalid_argument("eval: model has no K operation");
      return m.k(eval(m, g, f.child()));
  }
  throw std::logic_error("unreachable");
}

// Classical classes read truth as membership in TRUE; the IEL classes read
// truth as denoting the top element.
inline bool satisfies(const AlgebraicModel& m, const Assignment& g, const Formula& f) {
  int v = eval(m, g, f);
  return m.true_filter ? m.in_true(v) : v == m.alg.top;
}

struct Report {
  bool pass = true;
  std::vector<std::string> violations;

  void fail(const std::string& s) {
    pass = false;
    violations.push_back(s);
  }
};

// The model class a deductive system is checked and searched against. Only
// the weakest system lacks its own class here and borrows the next one up
// (sound for countermodel evidence and for theorem sweeps).
inline LogicId model_class(LogicId logic) { return logic == LogicId::L ? LogicId::L3 : logic; }

inline Report check_model(const AlgebraicModel& m, LogicId cls_in) {
  const LogicId cls = model_class(cls_in);
  const LogicTraits& t = traits(cls);
  Report r;
  const HeytingAlgebra& h = m.alg;
  auto name = [&](int a) { return std::to_string(a); };

  const bool classical = t.box_degree > 0;
  if (classical) {
    if (!m.true_filter) {
      r.fail("missing TRUE filter");
      return r;
    }
    if (!m.box_t || m.box_t->size() != static_cast<size_t>(h.n)) {
      r.fail("missing or malformed box table");
      return r;
    }
    if (!filter_mask_is_ultra(h, *m.true_filter)) r.fail("TRUE is not an ultrafilter");
  }
  const bool epistemic = t.kgroup != KGroup::None;
  if (epistemic && (!m.k_t || m.k_t->size() != static_cast<size_t>(h.n))) {
    r.fail("missing or malformed K table");
    return r;
  }

  if (classical) {
    if (t.box_degree >= 5) {
      if (!h.has_disjunction_property()) r.fail("disjunction property fails");
      for (int a = 0; a < h.n; ++a) {
        int want = a == h.top ? h.top : h.bot;
        if (m.box(a) != want) r.fail("box not rigid at " + name(a));
      }
    } else {
      for (int a = 0; a < h.n; ++a) {
        for (int b = 0; b < h.n; ++b) {
          if (!h.le(m.box(h.join(a, b)), h.join(m.box(a), m.box(b))))
            r.fail("box/join condition fails at (" + name(a) + "," + name(b) + ")");
          if (!h.le(m.box(h.imp(a, b)), m.box(h.imp(m.box(a), m.box(b)))))
            r.fail("boxed implication condition fails at (" + name(a) + "," + name(b) + ")");
        }
        if (!h.le(m.box(a), a)) r.fail("box below identity fails at " + name(a));
        if (m.in_true(m.box(a)) != (a == h.top)) r.fail("box/TRUE condition fails at " + name(a));
        if (t.box_degree >= 4 && !h.le(m.box(a), m.box(m.box(a))))
          r.fail("box idempotence fails at " + name(a));
      }
    }
  } else {
    if (!h.has_disjunction_property()) r.fail("disjunction property fails");
  }

  if (epistemic) {
    for (int a = 0; a < h.n; ++a) {
      for (int b = 0; b < h.n; ++b)
        if (!h.le(m.k(h.imp(a, b)), h.imp(m.k(a), m.k(b))))
          r.fail("K distribution fails at (" + name(a) + "," + name(b) + ")");
      if (classical && !h.le(m.box(a), m.box(m.k(a))))
        r.fail("boxed co-reflection fails at " + name(a));
      if (t.kgroup == KGroup::E4 || t.kgroup == KGroup::E5)
        if (!h.le(m.k(a), m.k(m.k(a)))) r.fail("positive introspection fails at " + name(a));
      if (t.kgroup == KGroup::E5)
        if (!h.le(h.neg(m.k(a)), m.k(h.neg(m.k(a)))))
          r.fail("negative introspection fails at " + name(a));
      if (t.kgroup == KGroup::E6) {
        if (!h.le(m.k(a), m.box(m.k(a)))) r.fail("positive bridge fails at " + name(a));
        if (!h.le(h.neg(m.k(a)), m.box(h.neg(m.k(a))))) r.fail("negative bridge fails at " + name(a));
      }
      if (t.knowledge && !h.le(m.k(a), h.neg(h.neg(a))))
        r.fail("knowledge condition fails at " + name(a));
      if (t.intco && !h.le(a, m.k(a))) r.fail("co-reflection condition fails at " + name(a));
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Enumeration

struct EnumOptions {
  // non-rigid box (and companion K) tables are only enumerated on carriers up
  // to this size; larger posets are skipped for those classes
  int table_carrier_cap = 5;
};

namespace detail {

inline bool box_table_ok(const HeytingAlgebra& h, uint64_t tru, const std::vector<int>& box,
                         bool need_a4) {
  for (int a = 0; a < h.n; ++a) {
    if (!h.le(box[static_cast<size_t>(a)], a)) return false;
    bool bt = (tru >> box[static_cast<size_t>(a)]) & 1;
    if (bt != (a == h.top)) return false;
    if (need_a4 && !h.le(box[static_cast<size_t>(a)], box[static_cast<size_t>(box[static_cast<size_t>(a)])]))
      return false;
    for (int b = 0; b < h.n; ++b) {
      if (!h.le(box[static_cast<size_t>(h.join(a, b))],
                h.join(box[static_cast<size_t>(a)], box[static_cast<size_t>(b)])))
        return false;
      int inner = h.imp(box[static_cast<size_t>(a)], box[static_cast<size_t>(b)]);
      if (!h.le(box[static_cast<size_t>(h.imp(a, b))], box[static_cast<size_t>(inner)]))
        return false;
    }
  }
  return true;
}

// Depth-first enumeration of K tables in carrier order (a linear extension),
// pruning with monotonicity, pairwise distribution over assigned elements and
// the cheap unary class conditions. Full class validity is re-checked by the
// caller through check_model.
class KTableEnum {
 public:
  KTableEnum(const AlgebraicModel& proto, LogicId cls) : proto_(proto), cls_(cls), t_(traits(model_class(cls))) {}

  void run(const std::function<bool(const std::vector<int>&)>& sink) {
    k_.assign(static_cast<size_t>(proto_.alg.n), -1);
    stop_ = false;
    sink_ = &sink;
    go(0);
  }

 private:
  const AlgebraicModel& proto_;
  LogicId cls_;
  const LogicTraits& t_;
  std::vector<int> k_;
  bool stop_ = false;
  const std::function<bool(const std::vector<int>&)>* sink_ = nullptr;

  bool cheap_ok(int m, int km) {
    const HeytingAlgebra& h = proto_.alg;
    for (int j = 0; j < m; ++j)
      if (h.le(j, m) && !h.le(k_[static_cast<size_t>(j)], km)) return false;  // monotone
    if (t_.kgroup == KGroup::E6 && km != h.bot && km != h.top) return false;
    if (t_.knowledge && !h.le(km, h.neg(h.neg(m)))) return false;
    if (t_.intco && !h.le(m, km)) return false;
    if (t_.box_degree > 0 && !h.le(proto_.box(m), (*proto_.box_t)[static_cast<size_t>(km)]))
      return false;  // boxed co-reflection
    // distribution over fully assigned pairs
    for (int a = 0; a <= m; ++a)
      for (int b = 0; b <= m; ++b) {
        int i = h.imp(a, b);
        if (i > m) continue;
        int ka = a == m ? km : k_[static_cast<size_t>(a)];
        int kb = b == m ? km : k_[static_cast<size_t>(b)];
        int ki = i == m ? km : k_[static_cast<size_t>(i)];
        if (!h.le(ki, h.imp(ka, kb))) return false;
      }
    return true;
  }

  void go(int m) {
    if (stop_) return;
    const HeytingAlgebra& h = proto_.alg;
    if (m == h.n) {
      if (!(*sink_)(k_)) stop_ = true;
      return;
    }
    for (int cand = 0; cand < h.n && !stop_; ++cand) {
      if (!cheap_ok(m, cand)) continue;
      k_[static_cast<size_t>(m)] = cand;
      go(m + 1);
    }
    k_[static_cast<size_t>(m)] = -1;
  }
};

}  // namespace detail

// Streams every algebraic model of the class over rooted posets of up to
// max_worlds worlds, one poset per isomorphism class, in a fixed order
// (poset, then TRUE, then box table, then K table). The sink returns false
// to stop early.
inline void enumerate_models(LogicId cls_in, int max_worlds, const EnumOptions& opt,
                             const std::function<bool(const AlgebraicModel&)>& sink) {
  const LogicId cls = model_class(cls_in);
  const LogicTraits& t = traits(cls);
  const bool classical = t.box_degree > 0;
  const bool epistemic = t.kgroup != KGroup::None;
  bool stop = false;

  std::vector<Poset> posets = rooted_posets(max_worlds);
  for (size_t pi = 0; pi < posets.size() && !stop; ++pi) {
    HeytingAlgebra h = upperset_algebra(posets[pi]);
    const bool rigid_only = t.box_degree >= 5;
    if (classical && !rigid_only && h.n > opt.table_carrier_cap) continue;

    std::vector<std::optional<uint64_t>> trues;
    if (classical) {
      for (uint64_t u : algebra_filters(h).ultra) trues.emplace_back(u);
    } else {
      trues.emplace_back(std::nullopt);  // IEL classes have no designated ultrafilter
    }

    for (size_t ui = 0; ui < trues.size() && !stop; ++ui) {
      std::vector<std::vector<int>> boxes;
      if (!classical) {
        boxes.emplace_back();  // no box
      } else if (rigid_only) {
        std::vector<int> rigid(static_cast<size_t>(h.n), h.bot);
        rigid[static_cast<size_t>(h.top)] = h.top;
        boxes.push_back(std::move(rigid));
      } else {
        // all tables over a tiny carrier, filtered against the box conditions
        std::vector<int> tbl(static_cast<size_t>(h.n), 0);
        const bool need_a4 = t.box_degree >= 4;
        for (;;) {
          if (detail::box_table_ok(h, *trues[ui], tbl, need_a4)) boxes.push_back(tbl);
          int i = 0;
          for (; i < h.n; ++i) {
            if (++tbl[static_cast<size_t>(i)] < h.n) break;
            tbl[static_cast<size_t>(i)] = 0;
          }
          if (i == h.n) break;
        }
      }

      for (size_t bi = 0; bi < boxes.size() && !stop; ++bi) {
        AlgebraicModel proto;
        proto.alg = h;
        proto.cls = cls;
        proto.true_filter = trues[ui];
        if (classical) proto.box_t = boxes[bi];
        auto mk_id = [&](int ki) {
          std::ostringstream os;
          os << to_string(cls) << "/P" << pi << "/U" << ui << "/B" << bi;
          if (ki >= 0) os << "/K" << ki;
          return os.str();
        };
        if (!epistemic) {
          proto.id = mk_id(-1);
          if (!sink(proto)) stop = true;
          continue;
        }
        int ki = 0;
        detail::KTableEnum ke(proto, cls);
        ke.run([&](const std::vector<int>& k) {
          AlgebraicModel m = proto;
          m.k_t = k;
          if (!check_model(m, cls).pass) return true;  // pruning is partial; final gate
          m.id = mk_id(ki++);
          if (!sink(m)) {
            stop = true;
            return false;
          }
          return true;
        });
      }
    }
  }
}

inline std::vector<AlgebraicModel> collect_models(LogicId cls, int max_worlds,
                                                  const EnumOptions& opt = {}) {
  std::vector<AlgebraicModel> out;
  enumerate_models(cls, max_worlds, opt, [&](const AlgebraicModel& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

}  // namespace boxkit
