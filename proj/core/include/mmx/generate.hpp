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

#include <cstdint>
#include <vector>

#include "mmx/graph.hpp"
#include "mmx/multimatrix.hpp"
#include "mmx/random.hpp"

namespace mmx {

// Each cell is 1 independently with probability `density`, drawn in dense order.
BinaryMultimatrix random_multimatrix(const Shape& shape, double density, Rng& rng);

// Integer costs uniform in [lo, hi], drawn in dense order.
CostMultimatrix random_cost_multimatrix(const Shape& shape, std::int64_t lo, std::int64_t hi,
                                        Rng& rng);

// Consecutively numbered parts of the given sizes. Each vertex pair (u < v,
// ascending) becomes an edge with probability `inter_density` across parts
// and `intra_density` inside a part.
PartitionedGraph random_partitioned_graph(const std::vector<int>& part_sizes, double inter_density,
                                          double intra_density, Rng& rng);

}  // namespace mmx
