#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "boxkit/formula.hpp"
#include "boxkit/ipc.hpp"
#include "boxkit/poset.hpp"

// Brute-force refutability oracle: enumerate every rooted Kripke model with
// at most max_worlds worlds (posets up to isomorphism, valuations = upper
// sets per variable) and look for a root refuting the goal while satisfying
// the hypotheses. Independent of the sequent-calculus solver.
namespace boxkit::oracle {

inline uint32_t force_mask(const Poset& p, const std::vector<uint32_t>& up,
                           const std::map<std::string, uint32_t>& val, const Formula& f) {
  switch (f.conn()) {
    case Conn::Var: {
      auto it = val.find(f.var_name());
      return it == val.end() ? 0 : it->second;
    }
    case Conn::Bot: return 0;
    case Conn::And: return force_mask(p, up, val, f.left()) & force_mask(p, up, val, f.right());
    case Conn::Or: return force_mask(p, up, val, f.left()) | force_mask(p, up, val, f.right());
    case Conn::Imp: {
      uint32_t a = force_mask(p, up, val, f.left());
      uint32_t b = force_mask(p, up, val, f.right());
      uint32_t out = 0;
      for (int w = 0; w < p.n; ++w)
        if ((up[static_cast<size_t>(w)] & a & ~b) == 0) out |= 1u << w;
      return out;
    }
    default: throw std::invalid_argument("force_mask: not an Fm0 formula");
  }
}

struct Found {
  Poset poset;
  std::map<std::string, uint32_t> val;
};

inline std::optional<Found> find_refutation(const std::vector<Formula>& hyps, const Formula& goal,
                                            int max_worlds) {
  std::set<std::string> vs = goal.vars();
  for (const auto& h : hyps) h.collect_vars(vs);
  std::vector<std::string> vars(vs.begin(), vs.end());

  for (const Poset& p : rooted_posets(max_worlds)) {
    const int root = p.root();
    std::vector<uint32_t> up(static_cast<size_t>(p.n));
    for (int w = 0; w < p.n; ++w) up[static_cast<size_t>(w)] = p.up_mask(w);
    std::vector<uint32_t> uppers = p.upper_sets();
    std::vector<size_t> pick(vars.size(), 0);
    for (;;) {
      std::map<std::string, uint32_t> val;
      for (size_t i = 0; i < vars.size(); ++i) val[vars[i]] = uppers[pick[i]];
      bool hyps_ok = true;
      for (const auto& h : hyps)
        if (!(force_mask(p, up, val, h) & (1u << root))) { hyps_ok = false; break; }
      if (hyps_ok && !(force_mask(p, up, val, goal) & (1u << root))) return Found{p, val};
      size_t i = 0;
      for (; i < vars.size(); ++i) {
        if (++pick[i] < uppers.size()) break;
        pick[i] = 0;
      }
      if (i == vars.size()) break;
      if (vars.empty()) break;
    }
  }
  return std::nullopt;
}

}  // namespace boxkit::oracle
