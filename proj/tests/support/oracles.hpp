// Copyright 2026 The mmx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Independent brute-force references for the test suites. Nothing here calls
// the solver code it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "mmx/graph.hpp"
#include "mmx/multimatrix.hpp"

namespace mmx::oracle {

// Fraction-free (Bareiss) elimination with row pivoting.
inline long long bareiss_determinant(std::vector<std::vector<long long>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  long long sign = 1;
  long long prev = 1;
  for (int i = 0; i < n - 1; ++i) {
    if (a[i][i] == 0) {
      int swap_row = -1;
      for (int r = i + 1; r < n; ++r) {
        if (a[r][i] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(a[i], a[swap_row]);
      sign = -sign;
    }
    for (int r = i + 1; r < n; ++r) {
      for (int c = i + 1; c < n; ++c) {
        a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) / prev;
      }
      a[r][i] = 0;
    }
    prev = a[i][i];
  }
  return sign * a[n - 1][n - 1];
}

inline std::vector<std::vector<long long>> as_matrix(const BinaryMultimatrix& m) {
  const int k = m.shape().k();
  std::vector<std::vector<long long>> a(k, std::vector<long long>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) a[i][j] = m.at({i + 1, j + 1}) ? 1 : 0;
  }
  return a;
}

// Every (n-1)-tuple of permutations of 0..k-1, flattened perm-major, in
// lexicographic order.
inline std::vector<std::vector<int>> all_tuples(int n, int k) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> out{{}};
  for (int d = 0; d < n - 1; ++d) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : out) {
      for (const auto& q : perms) {
        auto t = prefix;
        t.insert(t.end(), q.begin(), q.end());
        next.push_back(std::move(t));
      }
    }
    out = std::move(next);
  }
  return out;
}

inline bool tuple_on_ones(const BinaryMultimatrix& m, const std::vector<int>& flat) {
  const int n = m.shape().n();
  const int k = m.shape().k();
  for (int j = 0; j < k; ++j) {
    std::vector<int> c{j + 1};
    for (int d = 0; d < n - 1; ++d) c.push_back(flat[static_cast<std::size_t>(d * k + j)] + 1);
    if (!m.at(c)) return false;
  }
  return true;
}

inline int agree(const std::vector<int>& a, const std::vector<int>& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] == b[i];
  return s;
}

// Minimum number of r-planes covering all 1s by enumerating plane subsets.
inline int brute_min_cover(const BinaryMultimatrix& m, int r) {
  const int n = m.shape().n();
  const int k = m.shape().k();
  // plane = (free-axis bitmask, full coordinate whose free positions are ignored)
  std::vector<std::pair<int, std::vector<int>>> planes;
  std::map<std::pair<int, std::vector<int>>, bool> seen;
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != r) continue;
    for (std::size_t i = 0; i < m.shape().cell_count(); ++i) {
      auto c = m.shape().coord_at(i);
      for (int a = 0; a < n; ++a) {
        if (mask & (1 << a)) c[a] = 0;
      }
      if (!seen[{mask, c}]) {
        seen[{mask, c}] = true;
        planes.emplace_back(mask, c);
      }
    }
  }
  const auto ones = m.ones();
  auto in_plane = [&](const std::pair<int, std::vector<int>>& p, const std::vector<int>& c) {
    for (int a = 0; a < n; ++a) {
      if (!(p.first & (1 << a)) && p.second[a] != c[a]) return false;
    }
    return true;
  };
  (void)k;
  int best = static_cast<int>(planes.size());
  const std::uint64_t subsets = std::uint64_t{1} << planes.size();
  for (std::uint64_t s = 0; s < subsets; ++s) {
    const int size = __builtin_popcountll(s);
    if (size >= best) continue;
    bool ok = true;
    for (const auto& c : ones) {
      bool hit = false;
      for (std::size_t p = 0; p < planes.size() && !hit; ++p) {
        hit = (s >> p & 1U) && in_plane(planes[p], c);
      }
      if (!hit) {
        ok = false;
        break;
      }
    }
    if (ok) best = size;
  }
  return ones.empty() ? 0 : best;
}

// Maximum number of 1s pairwise agreeing in fewer than n-r positions.
inline int brute_max_matching(const BinaryMultimatrix& m, int r) {
  const int n = m.shape().n();
  const auto ones = m.ones();
  int best = 0;
  const std::uint64_t subsets = std::uint64_t{1} << ones.size();
  for (std::uint64_t s = 0; s < subsets; ++s) {
    const int size = __builtin_popcountll(s);
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t a = 0; a < ones.size() && ok; ++a) {
      if (!(s >> a & 1U)) continue;
      for (std::size_t b = a + 1; b < ones.size() && ok; ++b) {
        if ((s >> b & 1U) && agree(ones[a], ones[b]) >= n - r) ok = false;
      }
    }
    if (ok) best = size;
  }
  return best;
}

// Hall's condition for an n = 2 matrix by direct enumeration of row and
// column subsets.
inline bool brute_hall_both_sides(const std::vector<std::vector<long long>>& a) {
  const int k = static_cast<int>(a.size());
  for (int side = 0; side < 2; ++side) {
    for (int s = 1; s < (1 << k); ++s) {
      int nbr = 0;
      for (int j = 0; j < k; ++j) {
        bool any = false;
        for (int i = 0; i < k; ++i) {
          const long long v = side == 0 ? a[i][j] : a[j][i];
          any = any || ((s >> i & 1) && v);
        }
        nbr += any;
      }
      if (nbr < __builtin_popcount(static_cast<unsigned>(s))) return false;
    }
  }
  return true;
}

inline bool brute_perfect_matching(const std::vector<std::vector<long long>>& a) {
  const int k = static_cast<int>(a.size());
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) ok = a[i][p[i]] != 0;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Maximum matching by memoised recursion over vertex subsets.
inline int dp_max_matching(int vertex_count, const std::vector<Edge>& edges) {
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(vertex_count), 0);
  for (auto [u, v] : edges) {
    adj[u - 1] |= 1U << (v - 1);
    adj[v - 1] |= 1U << (u - 1);
  }
  std::vector<int> memo(std::size_t{1} << vertex_count, -1);
  std::function<int(std::uint32_t)> f = [&](std::uint32_t mask) -> int {
    if (!mask) return 0;
    int& slot = memo[mask];
    if (slot >= 0) return slot;
    const int v = __builtin_ctz(mask);
    const std::uint32_t rest = mask & ~(1U << v);
    int best = f(rest);
    for (std::uint32_t nb = adj[v] & rest; nb; nb &= nb - 1) {
      const int u = __builtin_ctz(nb);
      best = std::max(best, 1 + f(rest & ~(1U << u)));
    }
    return slot = best;
  };
  return f((vertex_count == 32) ? ~0U : ((1U << vertex_count) - 1));
}

// Minimum vertex cover by plain subset enumeration.
inline int brute_vertex_cover(int vertex_count, const std::vector<Edge>& edges) {
  int best = vertex_count;
  for (std::uint32_t s = 0; s < (1U << vertex_count); ++s) {
    const int size = __builtin_popcount(s);
    if (size >= best) continue;
    bool ok = true;
    for (auto [u, v] : edges) {
      if (!(s >> (u - 1) & 1U) && !(s >> (v - 1) & 1U)) {
        ok = false;
        break;
      }
    }
    if (ok) best = size;
  }
  return best;
}

inline std::vector<Edge> inter_part_edges(const PartitionedGraph& g) {
  std::vector<Edge> out;
  for (auto e : g.edges()) {
    if (g.part_of(e.first) != g.part_of(e.second)) out.push_back(e);
  }
  return out;
}

}  // namespace mmx::oracle
