#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "boxkit/algebra.hpp"
#include "boxkit/frames.hpp"
#include "boxkit/ipc.hpp"

namespace boxkit {

// Result of the prime-filter construction. Worlds are the prime filters of
// the algebra ordered by inclusion; world_filters records the filter behind
// each world, elem_prop the proposition (world mask) denoted by each carrier
// element. That map is an order isomorphism onto the frame's P.
struct AlgebraToFrame {
  RelationalModel model;
  std::vector<uint64_t> world_filters;  // carrier masks, one per world
  std::vector<uint32_t> elem_prop;      // m -> m's proposition
};

inline AlgebraToFrame algebra_to_frame(const AlgebraicModel& m, const Assignment& g) {
  const LogicTraits& t = traits(model_class(m.cls));
  if (t.box_degree != 5 && t.box_degree != 0)
    throw std::invalid_argument(std::string("no relational semantics for ") + to_string(m.cls));
  Report chk = check_model(m, m.cls);
  if (!chk.pass)
    throw std::invalid_argument("algebra_to_frame: model fails its class check: " +
                                (chk.violations.empty() ? std::string() : chk.violations.front()));
  const HeytingAlgebra& h = m.alg;
  FilterSets fs = algebra_filters(h);
  const int nw = static_cast<int>(fs.prime.size());
  if (nw > 30) throw std::invalid_argument("algebra_to_frame: too many prime filters");

  AlgebraToFrame out;
  out.world_filters = fs.prime;

  Frame& fr = out.model.frame;
  fr.order.n = nw;
  fr.order.mat.assign(static_cast<size_t>(nw) * nw, 0);
  for (int i = 0; i < nw; ++i)
    for (int j = 0; j < nw; ++j)
      fr.order.mat[static_cast<size_t>(i) * nw + j] = (fs.prime[static_cast<size_t>(i)] & ~fs.prime[static_cast<size_t>(j)]) == 0;
  if (!fr.order.rooted()) throw std::logic_error("prime filters have no least element");

  out.elem_prop.resize(static_cast<size_t>(h.n));
  for (int e = 0; e < h.n; ++e) {
    uint32_t mask = 0;
    for (int w = 0; w < nw; ++w)
      if ((fs.prime[static_cast<size_t>(w)] >> e) & 1) mask |= 1u << w;
    out.elem_prop[static_cast<size_t>(e)] = mask;
  }
  fr.props.assign(out.elem_prop.begin(), out.elem_prop.end());
  std::sort(fr.props.begin(), fr.props.end());
  fr.props.erase(std::unique(fr.props.begin(), fr.props.end()), fr.props.end());

  fr.egen.assign(static_cast<size_t>(nw), fr.full());
  if (m.k_t) {
    for (int w = 0; w < nw; ++w) {
      // generator of the believed filter at w: the meet of {e : k(e) in w}
      int gen = h.top;
      for (int e = 0; e < h.n; ++e)
        if ((fs.prime[static_cast<size_t>(w)] >> m.k(e)) & 1) gen = h.meet(gen, e);
      fr.egen[static_cast<size_t>(w)] = out.elem_prop[static_cast<size_t>(gen)];
    }
  }

  if (m.true_filter) {
    int wt = -1;
    for (int w = 0; w < nw; ++w)
      if (fs.prime[static_cast<size_t>(w)] == *m.true_filter) wt = w;
    if (wt < 0) throw std::logic_error("TRUE is not among the prime filters");
    fr.wt = wt;
  }
  fr.id = "bridge(" + m.id + ")";

  for (const auto& [x, e] : g) {
    if (e < 0 || e >= h.n) throw std::invalid_argument("algebra_to_frame: assignment out of range");
    out.model.g[x] = out.elem_prop[static_cast<size_t>(e)];
  }
  return out;
}

// The admissible propositions of a frame form a Heyting algebra; reading
// truth at the designated world turns the frame into an algebraic model of
// the corresponding class.
inline AlgebraicModel frame_to_algebra(const Frame& f) {
  if (!f.wt) throw std::invalid_argument("frame_to_algebra: designated maximal world missing");
  AlgebraicModel m;
  HeytingAlgebra& h = m.alg;
  h.n = static_cast<int>(f.props.size());
  h.base = f.order;
  h.elem = f.props;
  const size_t nn = static_cast<size_t>(h.n) * h.n;
  h.leq_t.assign(nn, 0);
  h.meet_t.assign(nn, 0);
  h.join_t.assign(nn, 0);
  h.imp_t.assign(nn, 0);
  auto at = [&](uint32_t mask) {
    int i = f.prop_index(mask);
    if (i < 0) throw std::invalid_argument("frame_to_algebra: P is not closed");
    return i;
  };
  h.bot = at(0);
  h.top = at(f.full());
  for (int a = 0; a < h.n; ++a)
    for (int b = 0; b < h.n; ++b) {
      uint32_t A = f.props[static_cast<size_t>(a)], B = f.props[static_cast<size_t>(b)];
      size_t ix = static_cast<size_t>(a) * h.n + b;
      h.leq_t[ix] = (A & ~B) == 0;
      h.meet_t[ix] = static_cast<uint8_t>(at(A & B));
      h.join_t[ix] = static_cast<uint8_t>(at(A | B));
      h.imp_t[ix] = static_cast<uint8_t>(at(f.imp_of(A, B)));
    }

  std::vector<int> box(static_cast<size_t>(h.n), h.bot);
  box[static_cast<size_t>(h.top)] = h.top;
  m.box_t = std::move(box);

  std::vector<int> k(static_cast<size_t>(h.n), 0);
  for (int a = 0; a < h.n; ++a) k[static_cast<size_t>(a)] = at(f.k_of(f.props[static_cast<size_t>(a)]));
  m.k_t = std::move(k);

  uint64_t tru = 0;
  for (int a = 0; a < h.n; ++a)
    if ((f.props[static_cast<size_t>(a)] >> *f.wt) & 1) tru |= 1ull << a;
  m.true_filter = tru;
  m.id = "algebra(" + f.id + ")";
  return m;
}

// Countermodel transfer: an intuitionistic Kripke model refuting a goal at
// its root becomes a relational model refuting box(goal): same worlds, all
// upper sets as propositions, trivial belief, any maximal world designated.
inline RelationalModel kripke_to_relational(const KripkeModel& k, const Formula& goal) {
  if (!goal.in_language(Language::Fm0))
    throw std::invalid_argument("kripke_to_relational: goal outside Fm0");
  if (k.n > 12) throw std::invalid_argument("kripke_to_relational: model too large");
  if (eval_kripke(k, k.root, goal))
    throw std::invalid_argument("kripke_to_relational: the model does not refute the goal");

  RelationalModel m;
  Frame& f = m.frame;
  f.order.n = k.n;
  f.order.mat.assign(static_cast<size_t>(k.n) * k.n, 0);
  for (int i = 0; i < k.n; ++i)
    for (int j = 0; j < k.n; ++j) f.order.mat[static_cast<size_t>(i) * k.n + j] = k.leq[static_cast<size_t>(i)][static_cast<size_t>(j)];
  if (!f.order.valid() || f.order.root() != k.root)
    throw std::invalid_argument("kripke_to_relational: not a rooted partial order at the root");
  f.props = f.order.upper_sets();
  f.egen.assign(static_cast<size_t>(k.n), f.full());
  f.wt = f.order.maximal().front();
  f.id = "lifted-countermodel";

  for (const std::string& x : goal.vars()) {
    uint32_t mask = 0;
    for (int w = 0; w < k.n; ++w)
      if (k.val[static_cast<size_t>(w)].count(x)) mask |= 1u << w;
    if (!f.order.is_upper_set(mask))
      throw std::invalid_argument("kripke_to_relational: valuation of " + x + " is not persistent");
    m.g[x] = mask;
  }
  return m;
}

}  // namespace boxkit
