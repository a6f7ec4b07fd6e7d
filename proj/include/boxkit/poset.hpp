#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace boxkit {

// Finite partial order on {0..n-1}, kept as a full reachability matrix.
struct Poset {
  int n = 0;
  std::vector<uint8_t> mat;  // mat[i*n+j]: i <= j

  bool leq(int i, int j) const { return mat[static_cast<size_t>(i) * n + j] != 0; }

  bool valid() const {
    if (n <= 0 || mat.size() != static_cast<size_t>(n) * n) return false;
    for (int i = 0; i < n; ++i) {
      if (!leq(i, i)) return false;
      for (int j = 0; j < n; ++j) {
        if (i != j && leq(i, j) && leq(j, i)) return false;
        for (int k = 0; k < n; ++k)
          if (leq(i, j) && leq(j, k) && !leq(i, k)) return false;
      }
    }
    return true;
  }

  // index of the unique minimum, or -1
  int root() const {
    for (int r = 0; r < n; ++r) {
      bool all = true;
      for (int j = 0; j < n; ++j) all = all && leq(r, j);
      if (all) return r;
    }
    return -1;
  }
  bool rooted() const { return root() >= 0; }

  std::vector<int> maximal() const {
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
      bool max = true;
      for (int j = 0; j < n; ++j)
        if (j != i && leq(i, j)) max = false;
      if (max) out.push_back(i);
    }
    return out;
  }

  // successors (upward cone) of w as a bitmask, including w itself
  uint32_t up_mask(int w) const {
    uint32_t m = 0;
    for (int j = 0; j < n; ++j)
      if (leq(w, j)) m |= 1u << j;
    return m;
  }

  bool is_upper_set(uint32_t s) const {
    for (int i = 0; i < n; ++i)
      if (s & (1u << i))
        if ((up_mask(i) & ~s) != 0) return false;
    return true;
  }

  std::vector<uint32_t> upper_sets() const {
    std::vector<uint32_t> out;
    for (uint32_t s = 0; s < (1u << n); ++s)
      if (is_upper_set(s)) out.push_back(s);
    return out;  // ascending, so 0 first and full mask last
  }

  // lexicographically least bit-encoding of the matrix over all relabelings;
  // n*n <= 64 bits here (n <= 8)
  uint64_t canonical() const {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    uint64_t best = ~0ull;
    do {
      uint64_t enc = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (leq(perm[i], perm[j])) enc |= 1ull << (i * n + j);
      best = std::min(best, enc);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }
};

inline Poset chain_poset(int n) {
  Poset p;
  p.n = n;
  p.mat.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) p.mat[static_cast<size_t>(i) * n + j] = 1;
  return p;
}

// All rooted posets with exactly n elements, one per isomorphism class, in
// canonical-encoding order. A rooted poset is the root plus an arbitrary
// poset on the remaining elements, so only the non-root part is enumerated.
// Results are cached; enumeration is deterministic.
inline const std::vector<Poset>& rooted_posets_exact(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("rooted_posets: size out of range");
  static std::mutex mu;
  static std::map<int, std::vector<Poset>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto hit = cache.find(n);
  if (hit != cache.end()) return hit->second;
  std::vector<Poset> out;
  {
    std::map<uint64_t, Poset> canon;
    const int m = n - 1;  // elements above the root
    const int pairs = m * (m - 1) / 2;
    std::vector<std::pair<int, int>> idx;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) idx.emplace_back(i, j);
    long long total = 1;
    for (int t = 0; t < pairs; ++t) total *= 3;
    for (long long code = 0; code < total; ++code) {
      std::vector<uint32_t> up(static_cast<size_t>(m));
      for (int i = 0; i < m; ++i) up[static_cast<size_t>(i)] = 1u << i;
      long long c = code;
      for (int t = 0; t < pairs; ++t) {
        int d = static_cast<int>(c % 3);
        c /= 3;
        auto [i, j] = idx[static_cast<size_t>(t)];
        if (d == 1) up[static_cast<size_t>(i)] |= 1u << j;
        if (d == 2) up[static_cast<size_t>(j)] |= 1u << i;
      }
      bool trans = true;
      for (int i = 0; i < m && trans; ++i)
        for (int j = 0; j < m && trans; ++j)
          if (up[static_cast<size_t>(i)] & (1u << j))
            if ((up[static_cast<size_t>(j)] & ~up[static_cast<size_t>(i)]) != 0) trans = false;
      if (!trans) continue;
      Poset p;
      p.n = n;
      p.mat.assign(static_cast<size_t>(n) * n, 0);
      for (int j = 0; j < n; ++j) p.mat[j] = 1;  // element 0 is the root
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          if (up[static_cast<size_t>(i)] & (1u << j))
            p.mat[static_cast<size_t>(i + 1) * n + (j + 1)] = 1;
      canon.emplace(p.canonical(), p);
    }
    for (auto& [enc, p] : canon) out.push_back(p);
  }
  return cache.emplace(n, std::move(out)).first->second;
}

inline std::vector<Poset> rooted_posets(int max_n) {
  std::vector<Poset> out;
  for (int n = 1; n <= max_n; ++n) {
    const std::vector<Poset>& batch = rooted_posets_exact(n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

}  // namespace boxkit
