#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "boxkit/algebra.hpp"

// Brute-force isomorphism search between algebraic models: a carrier
// permutation preserving order, operations, TRUE and the modal tables.
namespace boxkit::oracle {

inline bool models_isomorphic(const AlgebraicModel& a, const AlgebraicModel& b) {
  if (a.alg.n != b.alg.n) return false;
  if (a.true_filter.has_value() != b.true_filter.has_value()) return false;
  if (a.box_t.has_value() != b.box_t.has_value()) return false;
  if (a.k_t.has_value() != b.k_t.has_value()) return false;
  const int n = a.alg.n;
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j < n && ok; ++j) {
        if (a.alg.le(i, j) != b.alg.le(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)])) ok = false;
        if (ok && perm[static_cast<size_t>(a.alg.meet(i, j))] !=
                      b.alg.meet(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]))
          ok = false;
        if (ok && perm[static_cast<size_t>(a.alg.imp(i, j))] !=
                      b.alg.imp(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]))
          ok = false;
      }
      if (ok && a.true_filter && ((*a.true_filter >> i) & 1) != ((*b.true_filter >> perm[static_cast<size_t>(i)]) & 1))
        ok = false;
      if (ok && a.box_t && perm[static_cast<size_t>(a.box(i))] != b.box(perm[static_cast<size_t>(i)])) ok = false;
      if (ok && a.k_t && perm[static_cast<size_t>(a.k(i))] != b.k(perm[static_cast<size_t>(i)])) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace boxkit::oracle
