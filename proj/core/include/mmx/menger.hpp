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

#include <string>
#include <vector>

#include "mmx/graph.hpp"

namespace mmx {

// Brute-force exact solvers for small partitioned graphs. Every operation
// throws FeasibilityError when the vertex count exceeds `guard`, and
// InputError when `guard` exceeds kMaxVertexGuard.
inline constexpr int kDefaultVertexGuard = 14;
inline constexpr int kMaxVertexGuard = 20;

struct GraphMatching {
  std::vector<Edge> edges;
  int size() const noexcept { return static_cast<int>(edges.size()); }
};

struct VertexCover {
  std::vector<Vertex> vertices;
  int size() const noexcept { return static_cast<int>(vertices.size()); }
};

// Vertex set whose removal leaves no path between surviving vertices of
// different parts. May contain vertices of any part.
struct SeparatorCertificate {
  std::vector<Vertex> vertices;
  int size() const noexcept { return static_cast<int>(vertices.size()); }
};

// Pairwise vertex-disjoint simple paths, each starting and ending in two
// different parts. A single inter-part edge is a path.
struct PathSystem {
  std::vector<std::vector<Vertex>> paths;
  int size() const noexcept { return static_cast<int>(paths.size()); }
};

GraphMatching max_matching_multipartite(const PartitionedGraph& g,
                                        int guard = kDefaultVertexGuard);
// Least vertex set (by size, then lexicographically) touching every edge.
VertexCover min_vertex_cover_multipartite(const PartitionedGraph& g,
                                          int guard = kDefaultVertexGuard);
// Least separator by size, then lexicographically; subset enumeration.
SeparatorCertificate min_all_pairs_separator(const PartitionedGraph& g,
                                             int guard = kDefaultVertexGuard);
// Maximum disjoint path system, all part pairs pooled. Valid vertex sets are
// found by a path dynamic program over vertex subsets and then packed by
// backtracking.
PathSystem max_disjoint_path_system(const PartitionedGraph& g, int guard = kDefaultVertexGuard);

bool verify_graph_matching(const PartitionedGraph& g, const GraphMatching& m,
                           std::string* why = nullptr);
bool verify_vertex_cover(const PartitionedGraph& g, const VertexCover& c,
                         std::string* why = nullptr);
bool verify_separator(const PartitionedGraph& g, const SeparatorCertificate& s,
                      std::string* why = nullptr);
bool verify_path_system(const PartitionedGraph& g, const PathSystem& p,
                        std::string* why = nullptr);

enum class MinimaxVerdict { kEqual, kGap };

std::string to_string(MinimaxVerdict v);

struct CoverMatchingReport {
  VertexCover cover;
  GraphMatching matching;
  int gap = 0;
  MinimaxVerdict verdict = MinimaxVerdict::kEqual;
};

// Minimum vertex cover against maximum matching on a multipartite graph.
// Edges inside a part are rejected with InputError.
CoverMatchingReport check_cover_matching(const PartitionedGraph& g,
                                         int guard = kDefaultVertexGuard);

struct SeparatorPathsReport {
  SeparatorCertificate separator;
  PathSystem paths;
  int gap = 0;
  MinimaxVerdict verdict = MinimaxVerdict::kEqual;
};

// Minimum all-pairs separator against maximum disjoint path system.
SeparatorPathsReport check_separator_paths(const PartitionedGraph& g,
                                           int guard = kDefaultVertexGuard);

}  // namespace mmx
