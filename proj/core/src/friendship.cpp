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

#include "mmx/friendship.hpp"

#include <algorithm>
#include <set>

#include "mmx/det.hpp"
#include "mmx/error.hpp"

namespace mmx {
namespace {

int require_uniform_parts(const PartitionedGraph& g) {
  if (g.part_count() < 2) {
    throw InputError("friendship instances need at least 2 parts, got " +
                     std::to_string(g.part_count()));
  }
  const int k = g.uniform_part_size();
  if (k < 1) throw InputError("friendship instances need nonempty parts of equal size");
  return k;
}

void require_no_intra_edges(const PartitionedGraph& g) {
  for (auto [u, v] : g.edges()) {
    if (g.part_of(u) == g.part_of(v)) {
      throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                       " lies inside part " + std::to_string(g.part_of(u)));
    }
  }
}

// Augmenting-path matching from the vertices of `left` into `right`.
class PairMatcher {
 public:
  PairMatcher(const PartitionedGraph& g, const std::vector<Vertex>& left,
              const std::vector<Vertex>& right)
      : g_(g), left_(left), right_(right), match_right_(right.size(), -1),
        match_left_(left.size(), -1) {
    for (std::size_t u = 0; u < left_.size(); ++u) {
      std::vector<char> seen(right_.size(), 0);
      if (augment(u, seen)) ++size_;
    }
  }

  int size() const noexcept { return size_; }
  bool matched_left(std::size_t u) const { return match_left_[u] >= 0; }

  // Left/right index sets reachable from `root` along alternating paths.
  void alternating_tree(std::size_t root, std::vector<char>& left_in,
                        std::vector<char>& right_in) const {
    left_in.assign(left_.size(), 0);
    right_in.assign(right_.size(), 0);
    std::vector<std::size_t> stack{root};
    left_in[root] = 1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t r = 0; r < right_.size(); ++r) {
        if (right_in[r] || !g_.adjacent(left_[u], right_[r])) continue;
        right_in[r] = 1;
        const int partner = match_right_[r];
        if (partner >= 0 && !left_in[static_cast<std::size_t>(partner)]) {
          left_in[static_cast<std::size_t>(partner)] = 1;
          stack.push_back(static_cast<std::size_t>(partner));
        }
      }
    }
  }

 private:
  bool augment(std::size_t u, std::vector<char>& seen) {
    for (std::size_t r = 0; r < right_.size(); ++r) {
      if (seen[r] || !g_.adjacent(left_[u], right_[r])) continue;
      seen[r] = 1;
      if (match_right_[r] < 0 || augment(static_cast<std::size_t>(match_right_[r]), seen)) {
        match_right_[r] = static_cast<int>(u);
        match_left_[u] = static_cast<int>(r);
        return true;
      }
    }
    return false;
  }

  const PartitionedGraph& g_;
  const std::vector<Vertex>& left_;
  const std::vector<Vertex>& right_;
  std::vector<int> match_right_;
  std::vector<int> match_left_;
  int size_ = 0;
};

std::vector<Vertex> joint_neighborhood(const PartitionedGraph& g, const std::vector<Vertex>& s,
                                       const std::vector<Vertex>& target) {
  std::vector<Vertex> out;
  for (Vertex t : target) {
    if (std::any_of(s.begin(), s.end(), [&](Vertex v) { return g.adjacent(v, t); })) {
      out.push_back(t);
    }
  }
  return out;
}

bool deficient(const PartitionedGraph& g, const std::vector<Vertex>& s,
               const std::vector<Vertex>& target) {
  return joint_neighborhood(g, s, target).size() < s.size();
}

HallViolation witness_for_pair(const PartitionedGraph& g, int i, int j, const PairMatcher& matcher) {
  const auto& left = g.part(i);
  const auto& right = g.part(j);
  std::optional<std::vector<Vertex>> best;
  for (std::size_t root = 0; root < left.size(); ++root) {
    if (matcher.matched_left(root)) continue;
    std::vector<char> left_in;
    std::vector<char> right_in;
    matcher.alternating_tree(root, left_in, right_in);
    std::vector<Vertex> subset;
    for (std::size_t u = 0; u < left.size(); ++u) {
      if (left_in[u]) subset.push_back(left[u]);
    }
    std::sort(subset.begin(), subset.end());
    // Greedy single-vertex removal in ascending vertex order.
    for (std::size_t idx = 0; idx < subset.size();) {
      std::vector<Vertex> smaller = subset;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(idx));
      if (!smaller.empty() && deficient(g, smaller, right)) {
        subset = std::move(smaller);
      } else {
        ++idx;
      }
    }
    if (!best || subset.size() < best->size()) best = std::move(subset);
  }
  HallViolation v;
  v.from_part = i;
  v.to_part = j;
  v.subset = std::move(*best);
  v.neighborhood = joint_neighborhood(g, v.subset, right);
  v.deficiency = static_cast<int>(left.size()) - matcher.size();
  return v;
}

}  // namespace

BinaryMultimatrix tensorize(const PartitionedGraph& g) {
  const int k = require_uniform_parts(g);
  require_no_intra_edges(g);
  const Shape shape(g.part_count(), k);
  std::vector<std::uint8_t> cells(shape.cell_count(), 0);
  for (std::size_t idx = 0; idx < cells.size(); ++idx) {
    const Coord c = shape.coord_at(idx);
    bool clique = true;
    for (int a = 0; a < shape.n() && clique; ++a) {
      const Vertex va = g.part(a + 1)[static_cast<std::size_t>(c[static_cast<std::size_t>(a)] - 1)];
      for (int b = a + 1; b < shape.n() && clique; ++b) {
        const Vertex vb =
            g.part(b + 1)[static_cast<std::size_t>(c[static_cast<std::size_t>(b)] - 1)];
        clique = g.adjacent(va, vb);
      }
    }
    cells[idx] = clique ? 1 : 0;
  }
  return BinaryMultimatrix(shape, std::move(cells));
}

HallResult hall_condition(const PartitionedGraph& g) {
  require_uniform_parts(g);
  HallResult result;
  int worst = 0;
  for (int i = 1; i <= g.part_count(); ++i) {
    for (int j = 1; j <= g.part_count(); ++j) {
      if (i == j) continue;
      PairMatcher matcher(g, g.part(i), g.part(j));
      const int deficiency = static_cast<int>(g.part(i).size()) - matcher.size();
      if (deficiency > worst) {
        worst = deficiency;
        result.holds = false;
        result.violation = witness_for_pair(g, i, j, matcher);
      }
    }
  }
  return result;
}

std::optional<Decomposition> clique_decomposition(const PartitionedGraph& g) {
  const BinaryMultimatrix m = tensorize(g);
  const auto tuple = find_nonzero_monomial(m);
  if (!tuple) return std::nullopt;
  Decomposition d;
  for (const auto& c : support_of(m.shape(), *tuple)) {
    std::vector<Vertex> set;
    for (int a = 0; a < m.shape().n(); ++a) {
      set.push_back(g.part(a + 1)[static_cast<std::size_t>(c[static_cast<std::size_t>(a)] - 1)]);
    }
    d.sets.push_back(std::move(set));
  }
  return d;
}

bool verify_decomposition(const PartitionedGraph& g, const Decomposition& d, std::string* why) {
  auto fail = [why](std::string reason) {
    if (why) *why = std::move(reason);
    return false;
  };
  const int n = g.part_count();
  std::set<Vertex> used;
  for (std::size_t q = 0; q < d.sets.size(); ++q) {
    const auto& set = d.sets[q];
    if (static_cast<int>(set.size()) != n) {
      return fail("set " + std::to_string(q + 1) + " does not pick one vertex per part");
    }
    for (int p = 1; p <= n; ++p) {
      const Vertex v = set[static_cast<std::size_t>(p - 1)];
      if (v < 1 || v > g.vertex_count() || g.part_of(v) != p) {
        return fail("set " + std::to_string(q + 1) + " entry " + std::to_string(p) +
                    " is not in part " + std::to_string(p));
      }
      if (!used.insert(v).second) return fail("vertex " + std::to_string(v) + " used twice");
    }
    for (std::size_t a = 0; a < set.size(); ++a) {
      for (std::size_t b = a + 1; b < set.size(); ++b) {
        if (!g.adjacent(set[a], set[b])) {
          return fail("set " + std::to_string(q + 1) + " misses edge " + std::to_string(set[a]) +
                      "-" + std::to_string(set[b]));
        }
      }
    }
  }
  if (static_cast<int>(used.size()) != g.vertex_count()) return fail("not every vertex is covered");
  return true;
}

std::string to_string(FriendshipVerdict v) {
  switch (v) {
    case FriendshipVerdict::kConsistent:
      return "consistent";
    case FriendshipVerdict::kSufficiencyViolated:
      return "sufficiency-violated";
    case FriendshipVerdict::kNecessityViolated:
      return "necessity-violated";
  }
  return "unknown";
}

FriendshipReport check_friendship_theorem(const PartitionedGraph& g) {
  FriendshipReport report;
  report.decomposition = clique_decomposition(g);
  report.decomposable = report.decomposition.has_value();
  auto hall = hall_condition(g);
  report.hall = hall.holds;
  report.violation = std::move(hall.violation);
  if (report.hall && !report.decomposable) {
    report.verdict = FriendshipVerdict::kSufficiencyViolated;
  } else if (!report.hall && report.decomposable) {
    report.verdict = FriendshipVerdict::kNecessityViolated;
  } else {
    report.verdict = FriendshipVerdict::kConsistent;
  }
  return report;
}

}  // namespace mmx
