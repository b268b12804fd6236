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
#include <string>

#include "mmx/det.hpp"
#include "mmx/multimatrix.hpp"
#include "mmx/rational.hpp"

namespace mmx {

// Axial assignment: one cell per index value on every axis, i.e. the
// support of a PermutationTuple. The report header quotes this reading.
inline constexpr const char* kAxialInterpretation =
    "axial: choose k cells, each index value used exactly once on every axis";

struct Assignment {
  PermutationTuple tuple;
  Rational cost;
};

// Sum of the costs on support_of(tuple).
Rational assignment_cost(const CostMultimatrix& c, const PermutationTuple& tuple);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;
inline constexpr std::size_t kDefaultAssignCellBudget = 1u << 16;

// Full enumeration in lexicographic tuple order; ties keep the least tuple.
// Throws FeasibilityError when (k!)^(n-1) exceeds `budget`.
Assignment brute_force_assign(const CostMultimatrix& c,
                              std::uint64_t budget = kDefaultEnumerationBudget);

// For each axis in turn and each of its k slices (the cells with that axis
// fixed to one value), subtract the slice minimum. Every feasible assignment
// meets each slice exactly once, so its cost on the input equals
// `lower_bound` plus its cost on `reduced`.
struct Reduction {
  Rational lower_bound;
  CostMultimatrix reduced;
};

Reduction reduction_bound(const CostMultimatrix& c);

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t pruned = 0;
  std::uint64_t leaves = 0;
  Rational root_bound;
};

struct SolveResult {
  Assignment assignment;
  SolveStats stats;
};

// Exact branch and bound. Rows (axis-1 index values) are assigned in
// increasing order; candidate cells of a row are tried in reduced-cost order
// and a node is bounded by its accumulated cost plus the reduction bound of
// the residual sub-instance. Ties resolve to the least tuple, matching
// brute_force_assign. Throws FeasibilityError when k^n exceeds `cell_budget`.
SolveResult solve_axial_map(const CostMultimatrix& c,
                            std::size_t cell_budget = kDefaultAssignCellBudget);

}  // namespace mmx
