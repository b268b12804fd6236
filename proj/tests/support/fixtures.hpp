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

#include <set>
#include <vector>

#include "mmx/graph.hpp"
#include "mmx/multimatrix.hpp"

namespace mmx::fixture {

// Three parts of size 2 joined pairwise by perfect matchings; contains no
// triangle, so it has no clique decomposition.
inline PartitionedGraph six_vertex_matchings() {
  // a1=1 a2=2 b1=3 b2=4 c1=5 c2=6
  return make_graph({2, 2, 2}, {{1, 3}, {2, 4}, {1, 6}, {2, 5}, {3, 5}, {4, 6}});
}

inline PartitionedGraph triangle() { return make_graph({1, 1, 1}, {{1, 2}, {1, 3}, {2, 3}}); }

inline PartitionedGraph complete_multipartite(int parts, int size) {
  std::vector<Edge> edges;
  const int v = parts * size;
  for (int a = 1; a <= v; ++a) {
    for (int b = a + 1; b <= v; ++b) {
      if ((a - 1) / size != (b - 1) / size) edges.emplace_back(a, b);
    }
  }
  return make_graph(std::vector<int>(static_cast<std::size_t>(parts), size), edges);
}

inline BinaryMultimatrix all_ones(int n, int k) {
  const Shape s(n, k);
  return BinaryMultimatrix(s, std::vector<std::uint8_t>(s.cell_count(), 1));
}

// Instance `bits` over a shape: bit c sets dense cell c.
inline BinaryMultimatrix from_bits(const Shape& s, std::uint64_t bits) {
  std::vector<std::uint8_t> cells(s.cell_count());
  for (std::size_t c = 0; c < cells.size(); ++c) cells[c] = (bits >> c) & 1U;
  return BinaryMultimatrix(s, cells);
}

}  // namespace mmx::fixture
