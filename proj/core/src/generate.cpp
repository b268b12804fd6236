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

#include "mmx/generate.hpp"

#include "mmx/error.hpp"

namespace mmx {
namespace {

void check_density(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError(std::string(what) + " must lie in [0, 1]");
}

}  // namespace

BinaryMultimatrix random_multimatrix(const Shape& shape, double density, Rng& rng) {
  check_density(density, "density");
  std::vector<std::uint8_t> cells(shape.cell_count());
  for (auto& c : cells) c = rng.bernoulli(density) ? 1 : 0;
  return BinaryMultimatrix(shape, std::move(cells));
}

CostMultimatrix random_cost_multimatrix(const Shape& shape, std::int64_t lo, std::int64_t hi,
                                        Rng& rng) {
  if (lo > hi) throw InputError("cost range is empty");
  std::vector<Rational> cells(shape.cell_count());
  for (auto& c : cells) c = Rational(rng.between(lo, hi));
  return CostMultimatrix(shape, std::move(cells));
}

PartitionedGraph random_partitioned_graph(const std::vector<int>& part_sizes, double inter_density,
                                          double intra_density, Rng& rng) {
  check_density(inter_density, "edge density");
  check_density(intra_density, "intra-part density");
  std::vector<int> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    if (part_sizes[p] < 0) throw InputError("negative part size");
    for (int i = 0; i < part_sizes[p]; ++i) part_of.push_back(static_cast<int>(p));
  }
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      const bool same = part_of[static_cast<std::size_t>(u - 1)] == part_of[static_cast<std::size_t>(v - 1)];
      const double p = same ? intra_density : inter_density;
      if (p > 0.0 && rng.bernoulli(p)) edges.emplace_back(u, v);
    }
  }
  return make_graph(part_sizes, std::move(edges));
}

}  // namespace mmx
