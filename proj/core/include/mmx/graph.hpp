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
#include <string_view>
#include <utility>
#include <vector>

namespace mmx {

using Vertex = int;  // 1-based
using Edge = std::pair<Vertex, Vertex>;  // stored with first < second

// Simple undirected graph whose vertex set 1..V is partitioned into ordered
// parts. Each part keeps the vertex order it was given in; that order fixes
// the index of a vertex within its part.
class PartitionedGraph {
 public:
  // Throws InputError when parts overlap, miss a vertex, or an edge is a
  // loop, repeated, or out of range.
  PartitionedGraph(int vertex_count, std::vector<std::vector<Vertex>> parts,
                   std::vector<Edge> edges);

  int vertex_count() const noexcept { return vertex_count_; }
  int part_count() const noexcept { return static_cast<int>(parts_.size()); }
  const std::vector<std::vector<Vertex>>& parts() const noexcept { return parts_; }
  const std::vector<Vertex>& part(int p) const { return parts_[static_cast<std::size_t>(p - 1)]; }
  // Sorted ascending.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // 1-based part number of v.
  int part_of(Vertex v) const { return part_of_[static_cast<std::size_t>(v)]; }
  bool adjacent(Vertex u, Vertex v) const;
  const std::vector<Vertex>& neighbors(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }

  bool has_intra_part_edge() const noexcept;
  // Equal part sizes; returns the common size, or -1.
  int uniform_part_size() const noexcept;

  PartitionedGraph with_edges(std::vector<Edge> edges) const;

  friend bool operator==(const PartitionedGraph& a, const PartitionedGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.parts_ == b.parts_ && a.edges_ == b.edges_;
  }

 private:
  int vertex_count_;
  std::vector<std::vector<Vertex>> parts_;
  std::vector<Edge> edges_;
  std::vector<int> part_of_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<char> matrix_;
};

// Partitioned-graph text format:
//
//   pg <nparts> <nvertices> <nedges>
//   part <p> <v1> <v2> ...
//   edge <u> <v>
//
// Vertex ids are 1-based and each belongs to exactly one part.
// Throws ParseError with the 1-based line number.
PartitionedGraph parse_graph(std::string_view text);

// Canonical text: parts in order, then edges sorted ascending.
std::string serialize(const PartitionedGraph& g);

// Convenience: parts given by their sizes, vertices numbered consecutively.
PartitionedGraph make_graph(const std::vector<int>& part_sizes, std::vector<Edge> edges);

}  // namespace mmx
