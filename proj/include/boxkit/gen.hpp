#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boxkit/formula.hpp"

// Deterministic pseudo-random formula generation (splitmix64-based), used
// by the reproducible corpora.
namespace boxkit::gen {

struct Rng {
  uint64_t s;
  explicit Rng(uint64_t seed) : s(seed) {}
  uint64_t next() {  // splitmix64
    uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
};

inline Formula random_formula(Rng& rng, int depth, Language lang,
                              const std::vector<std::string>& pool = {"x", "y", "z"}) {
  const bool box_ok = lang == Language::Fm1 || lang == Language::Fm;
  const bool k_ok = lang == Language::FmE || lang == Language::Fm;
  if (depth == 0 || rng.below(5) == 0) {
    if (rng.below(8) == 0) return Formula::bot();
    return Formula::var(pool[static_cast<size_t>(rng.below(static_cast<int>(pool.size())))]);
  }
  for (;;) {
    switch (rng.below(7)) {
      case 0: return Formula::and_(random_formula(rng, depth - 1, lang, pool),
                                   random_formula(rng, depth - 1, lang, pool));
      case 1: return Formula::or_(random_formula(rng, depth - 1, lang, pool),
                                  random_formula(rng, depth - 1, lang, pool));
      case 2:
      case 3: return Formula::imp(random_formula(rng, depth - 1, lang, pool),
                                  random_formula(rng, depth - 1, lang, pool));
      case 4: return Formula::neg(random_formula(rng, depth - 1, lang, pool));
      case 5:
        if (box_ok) {
          if (rng.below(3) == 0)
            return Formula::diamond(random_formula(rng, depth - 1, lang, pool));
          return Formula::box(random_formula(rng, depth - 1, lang, pool));
        }
        break;
      case 6:
        if (k_ok) return Formula::k(random_formula(rng, depth - 1, lang, pool));
        break;
    }
  }
}

}  // namespace boxkit::gen
