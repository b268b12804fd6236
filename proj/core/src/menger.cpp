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

#include "mmx/menger.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "mmx/error.hpp"

namespace mmx {
namespace {

using Mask = std::uint32_t;

void check_guard(const PartitionedGraph& g, int guard) {
  if (guard > kMaxVertexGuard) {
    throw InputError("guard " + std::to_string(guard) + " exceeds the hard limit " +
                     std::to_string(kMaxVertexGuard));
  }
  if (g.vertex_count() > guard) {
    throw FeasibilityError("graph has " + std::to_string(g.vertex_count()) +
                           " vertices, brute-force guard is " + std::to_string(guard));
  }
}

Mask bit(Vertex v) { return Mask{1} << (v - 1); }

std::vector<Vertex> vertices_of(Mask m) {
  std::vector<Vertex> out;
  for (Vertex v = 1; m; ++v, m >>= 1) {
    if (m & 1U) out.push_back(v);
  }
  return out;
}

// Calls visit(mask) for each subset of {1..V} of the given size, in
// lexicographic order of the sorted vertex lists, until visit returns true.
template <typename Visit>
bool for_each_subset(int vertex_count, int size, Visit visit) {
  std::vector<int> combo(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) combo[static_cast<std::size_t>(i)] = i + 1;
  for (;;) {
    Mask m = 0;
    for (int v : combo) m |= bit(v);
    if (visit(m)) return true;
    int i = size - 1;
    while (i >= 0 && combo[static_cast<std::size_t>(i)] == vertex_count - size + i + 1) --i;
    if (i < 0) return false;
    ++combo[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < size; ++j) {
      combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

bool separates(const PartitionedGraph& g, Mask removed) {
  const int n = g.vertex_count();
  std::vector<int> component(static_cast<std::size_t>(n) + 1, 0);
  int label = 0;
  for (Vertex start = 1; start <= n; ++start) {
    if ((removed & bit(start)) || component[static_cast<std::size_t>(start)]) continue;
    ++label;
    const int part = g.part_of(start);
    std::vector<Vertex> stack{start};
    component[static_cast<std::size_t>(start)] = label;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      if (g.part_of(v) != part) return false;
      for (Vertex u : g.neighbors(v)) {
        if ((removed & bit(u)) || component[static_cast<std::size_t>(u)]) continue;
        component[static_cast<std::size_t>(u)] = label;
        stack.push_back(u);
      }
    }
  }
  return true;
}

class MatchingSearch {
 public:
  explicit MatchingSearch(const PartitionedGraph& g) : g_(g) {}

  GraphMatching run() {
    std::vector<Edge> current;
    descend(1, 0, current);
    return GraphMatching{best_};
  }

 private:
  void descend(Vertex v, Mask used, std::vector<Edge>& current) {
    const int n = g_.vertex_count();
    while (v <= n && (used & bit(v))) ++v;
    if (current.size() > best_.size()) best_ = current;
    if (v > n) return;
    const int free_left = n - v + 1 - std::popcount(used >> (v - 1));
    if (static_cast<int>(current.size()) + free_left / 2 <= static_cast<int>(best_.size())) return;
    for (Vertex u : g_.neighbors(v)) {
      if (u < v || (used & bit(u))) continue;
      current.emplace_back(v, u);
      descend(v + 1, used | bit(v) | bit(u), current);
      current.pop_back();
    }
    descend(v + 1, used | bit(v), current);
  }

  const PartitionedGraph& g_;
  std::vector<Edge> best_;
};

class PathPacking {
 public:
  explicit PathPacking(const PartitionedGraph& g) : g_(g), n_(g.vertex_count()) {
    const std::size_t subsets = std::size_t{1} << n_;
    part_mask_.assign(static_cast<std::size_t>(g.part_count()) + 1, 0);
    for (Vertex v = 1; v <= n_; ++v) part_mask_[static_cast<std::size_t>(g.part_of(v))] |= bit(v);

    // starts_[mask * n + (v-1)]: start vertices of simple paths that end at v
    // and visit exactly `mask`.
    starts_.assign(subsets * static_cast<std::size_t>(n_), 0);
    for (Vertex v = 1; v <= n_; ++v) at(bit(v), v) = bit(v);
    for (Mask mask = 1; mask < subsets; ++mask) {
      for (Vertex v = 1; v <= n_; ++v) {
        const Mask s = at(mask, v);
        if (!s) continue;
        for (Vertex u : g_.neighbors(v)) {
          if (!(mask & bit(u))) at(mask | bit(u), u) |= s;
        }
      }
    }
    std::vector<char> valid(subsets, 0);
    for (Mask mask = 1; mask < subsets; ++mask) valid[mask] = end_of(mask) != 0;
    // any_valid[mask]: some subset of mask is valid.
    std::vector<char> any_valid = valid;
    for (int i = 0; i < n_; ++i) {
      for (Mask mask = 0; mask < subsets; ++mask) {
        if (mask & (Mask{1} << i)) any_valid[mask] |= any_valid[mask ^ (Mask{1} << i)];
      }
    }
    containing_.assign(static_cast<std::size_t>(n_) + 1, {});
    for (Mask mask = 1; mask < subsets; ++mask) {
      if (!valid[mask]) continue;
      bool minimal = true;
      for (Mask rest = mask; rest && minimal; rest &= rest - 1) {
        const Mask low = rest & (~rest + 1);
        minimal = !any_valid[mask ^ low];
      }
      if (!minimal) continue;
      for (Vertex v : vertices_of(mask)) containing_[static_cast<std::size_t>(v)].push_back(mask);
    }
  }

  PathSystem run() {
    std::vector<Mask> current;
    descend((n_ == 0) ? 0 : static_cast<Mask>((std::uint64_t{1} << n_) - 1), current);
    PathSystem out;
    for (Mask m : best_) {
      auto path = path_through(m);
      if (path.front() > path.back()) std::reverse(path.begin(), path.end());
      out.paths.push_back(std::move(path));
    }
    std::sort(out.paths.begin(), out.paths.end());
    return out;
  }

 private:
  Mask& at(Mask mask, Vertex v) {
    return starts_[static_cast<std::size_t>(mask) * static_cast<std::size_t>(n_) +
                   static_cast<std::size_t>(v - 1)];
  }
  Mask at(Mask mask, Vertex v) const {
    return starts_[static_cast<std::size_t>(mask) * static_cast<std::size_t>(n_) +
                   static_cast<std::size_t>(v - 1)];
  }

  // Smallest end vertex of a path over `mask` whose start lies in another part, or 0.
  Vertex end_of(Mask mask) const {
    for (Vertex v = 1; v <= n_; ++v) {
      if (!(mask & bit(v))) continue;
      if (at(mask, v) & ~part_mask_[static_cast<std::size_t>(g_.part_of(v))]) return v;
    }
    return 0;
  }

  std::vector<Vertex> path_through(Mask mask) const {
    const Vertex end = end_of(mask);
    const Mask foreign = at(mask, end) & ~part_mask_[static_cast<std::size_t>(g_.part_of(end))];
    const Vertex start = static_cast<Vertex>(std::countr_zero(foreign)) + 1;
    // Walk back from the end, always keeping `start` reachable.
    std::vector<Vertex> reversed{end};
    Mask rest = mask;
    Vertex v = end;
    while (v != start) {
      rest ^= bit(v);
      Vertex prev = 0;
      for (Vertex u : g_.neighbors(v)) {
        if ((rest & bit(u)) && (at(rest, u) & bit(start))) {
          prev = u;
          break;
        }
      }
      if (!prev) throw std::logic_error("path reconstruction failed");
      reversed.push_back(prev);
      v = prev;
    }
    return {reversed.rbegin(), reversed.rend()};
  }

  void descend(Mask avail, std::vector<Mask>& current) {
    if (current.size() > best_.size()) best_ = current;
    if (current.size() + static_cast<std::size_t>(std::popcount(avail)) / 2 <= best_.size()) return;
    // Lowest available vertex that still lies on some admissible path.
    Vertex pivot = 0;
    for (Vertex v : vertices_of(avail)) {
      for (Mask m : containing_[static_cast<std::size_t>(v)]) {
        if ((m & avail) == m) {
          pivot = v;
          break;
        }
      }
      if (pivot) break;
    }
    if (!pivot) return;
    for (Mask m : containing_[static_cast<std::size_t>(pivot)]) {
      if ((m & avail) != m) continue;
      current.push_back(m);
      descend(avail & ~m, current);
      current.pop_back();
    }
    descend(avail & ~bit(pivot), current);
  }

  const PartitionedGraph& g_;
  int n_;
  std::vector<Mask> part_mask_;
  std::vector<Mask> starts_;
  std::vector<std::vector<Mask>> containing_;
  std::vector<Mask> best_;
};

bool bipartite_like(const PartitionedGraph& g) {
  int nonempty = 0;
  for (const auto& p : g.parts()) nonempty += !p.empty();
  return nonempty <= 2;
}

}  // namespace

GraphMatching max_matching_multipartite(const PartitionedGraph& g, int guard) {
  check_guard(g, guard);
  return MatchingSearch(g).run();
}

VertexCover min_vertex_cover_multipartite(const PartitionedGraph& g, int guard) {
  check_guard(g, guard);
  VertexCover out;
  for (int size = 0; size <= g.vertex_count(); ++size) {
    const bool found = for_each_subset(g.vertex_count(), size, [&](Mask m) {
      for (auto [u, v] : g.edges()) {
        if (!(m & (bit(u) | bit(v)))) return false;
      }
      out.vertices = vertices_of(m);
      return true;
    });
    if (found) break;
  }
  return out;
}

SeparatorCertificate min_all_pairs_separator(const PartitionedGraph& g, int guard) {
  check_guard(g, guard);
  SeparatorCertificate out;
  for (int size = 0; size <= g.vertex_count(); ++size) {
    const bool found = for_each_subset(g.vertex_count(), size, [&](Mask m) {
      if (!separates(g, m)) return false;
      out.vertices = vertices_of(m);
      return true;
    });
    if (found) break;
  }
  return out;
}

PathSystem max_disjoint_path_system(const PartitionedGraph& g, int guard) {
  check_guard(g, guard);
  return PathPacking(g).run();
}

bool verify_graph_matching(const PartitionedGraph& g, const GraphMatching& m, std::string* why) {
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (auto [u, v] : m.edges) {
    if (u < 1 || v < 1 || u > g.vertex_count() || v > g.vertex_count() || !g.adjacent(u, v)) {
      if (why) *why = "pair " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge";
      return false;
    }
    for (Vertex x : {u, v}) {
      if (used[static_cast<std::size_t>(x)]++) {
        if (why) *why = "vertex " + std::to_string(x) + " is matched twice";
        return false;
      }
    }
  }
  return true;
}

bool verify_vertex_cover(const PartitionedGraph& g, const VertexCover& c, std::string* why) {
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (Vertex v : c.vertices) {
    if (v < 1 || v > g.vertex_count()) {
      if (why) *why = "vertex " + std::to_string(v) + " out of range";
      return false;
    }
    in[static_cast<std::size_t>(v)] = 1;
  }
  for (auto [u, v] : g.edges()) {
    if (!in[static_cast<std::size_t>(u)] && !in[static_cast<std::size_t>(v)]) {
      if (why) *why = "edge " + std::to_string(u) + "-" + std::to_string(v) + " is uncovered";
      return false;
    }
  }
  return true;
}

bool verify_separator(const PartitionedGraph& g, const SeparatorCertificate& s, std::string* why) {
  std::vector<char> removed(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (Vertex v : s.vertices) {
    if (v < 1 || v > g.vertex_count()) {
      if (why) *why = "vertex " + std::to_string(v) + " out of range";
      return false;
    }
    removed[static_cast<std::size_t>(v)] = 1;
  }
  // Plain reachability from every surviving vertex.
  for (Vertex start = 1; start <= g.vertex_count(); ++start) {
    if (removed[static_cast<std::size_t>(start)]) continue;
    std::vector<char> seen(removed.size(), 0);
    std::vector<Vertex> queue{start};
    seen[static_cast<std::size_t>(start)] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      if (g.part_of(v) != g.part_of(start)) {
        if (why) {
          *why = "vertices " + std::to_string(start) + " and " + std::to_string(v) +
                 " remain connected";
        }
        return false;
      }
      for (Vertex u : g.neighbors(v)) {
        if (removed[static_cast<std::size_t>(u)] || seen[static_cast<std::size_t>(u)]) continue;
        seen[static_cast<std::size_t>(u)] = 1;
        queue.push_back(u);
      }
    }
  }
  return true;
}

bool verify_path_system(const PartitionedGraph& g, const PathSystem& p, std::string* why) {
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (const auto& path : p.paths) {
    if (path.size() < 2) {
      if (why) *why = "path with fewer than two vertices";
      return false;
    }
    for (std::size_t i = 0; i < path.size(); ++i) {
      const Vertex v = path[i];
      if (v < 1 || v > g.vertex_count()) {
        if (why) *why = "vertex " + std::to_string(v) + " out of range";
        return false;
      }
      if (used[static_cast<std::size_t>(v)]++) {
        if (why) *why = "vertex " + std::to_string(v) + " is shared or repeated";
        return false;
      }
      if (i > 0 && !g.adjacent(path[i - 1], v)) {
        if (why) *why = "consecutive vertices " + std::to_string(path[i - 1]) + "," +
                        std::to_string(v) + " are not adjacent";
        return false;
      }
    }
    if (g.part_of(path.front()) == g.part_of(path.back())) {
      if (why) *why = "path ends lie in the same part";
      return false;
    }
  }
  return true;
}

std::string to_string(MinimaxVerdict v) { return v == MinimaxVerdict::kEqual ? "equal" : "gap"; }

CoverMatchingReport check_cover_matching(const PartitionedGraph& g, int guard) {
  for (auto [u, v] : g.edges()) {
    if (g.part_of(u) == g.part_of(v)) {
      throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                       " lies inside part " + std::to_string(g.part_of(u)) +
                       "; the graph is not multipartite");
    }
  }
  CoverMatchingReport report;
  report.cover = min_vertex_cover_multipartite(g, guard);
  report.matching = max_matching_multipartite(g, guard);
  report.gap = report.cover.size() - report.matching.size();
  if (report.gap < 0) throw std::logic_error("matching exceeds vertex cover: solver defect");
  if (report.gap != 0 && bipartite_like(g)) {
    throw std::logic_error("bipartite cover/matching gap: solver defect");
  }
  report.verdict = report.gap == 0 ? MinimaxVerdict::kEqual : MinimaxVerdict::kGap;
  return report;
}

SeparatorPathsReport check_separator_paths(const PartitionedGraph& g, int guard) {
  SeparatorPathsReport report;
  report.separator = min_all_pairs_separator(g, guard);
  report.paths = max_disjoint_path_system(g, guard);
  report.gap = report.separator.size() - report.paths.size();
  if (report.gap < 0) throw std::logic_error("paths exceed separator: solver defect");
  if (report.gap != 0 && bipartite_like(g)) {
    throw std::logic_error("two-part separator/path gap: solver defect");
  }
  report.verdict = report.gap == 0 ? MinimaxVerdict::kEqual : MinimaxVerdict::kGap;
  return report;
}

}  // namespace mmx
