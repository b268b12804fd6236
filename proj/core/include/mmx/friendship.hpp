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

#include <optional>
#include <string>
#include <vector>

#include "mmx/graph.hpp"
#include "mmx/multimatrix.hpp"

namespace mmx {

// Cell (i_1, ..., i_n) is 1 iff the i_d-th vertex of every part d are
// pairwise adjacent. Requires n >= 2 parts of a common size k >= 1 and no
// edge inside a part; throws InputError naming the violation otherwise.
BinaryMultimatrix tensorize(const PartitionedGraph& g);

// A subset S of part `from_part` whose joint neighbourhood inside part
// `to_part` is smaller than S.
struct HallViolation {
  int from_part = 0;
  int to_part = 0;
  std::vector<Vertex> subset;
  std::vector<Vertex> neighborhood;
  // k minus the maximum matching size between the two parts.
  int deficiency = 0;
};

struct HallResult {
  bool holds = true;
  std::optional<HallViolation> violation;
};

// Pairwise Hall condition: for every ordered pair of distinct parts (i, j)
// and every S within part i, |N(S) within part j| >= |S|. Checked with one
// augmenting-path matching per ordered pair. On failure the witness uses
// the pair with the largest deficiency (first in (i, j) order on ties) and
// the smallest subset obtained by shrinking each alternating tree until no
// single vertex can be dropped.
HallResult hall_condition(const PartitionedGraph& g);

// k disjoint friendship sets; sets[q][d] is the chosen vertex of part d+1.
struct Decomposition {
  std::vector<std::vector<Vertex>> sets;
};

// Partition into k vertex-disjoint n-cliques, one vertex per part, built from
// the lexicographically least nonzero monomial of tensorize(g). Exact.
std::optional<Decomposition> clique_decomposition(const PartitionedGraph& g);

// Checks disjointness, coverage and pairwise adjacency without reference to
// how `d` was produced. On failure stores the reason in `why` when non-null.
bool verify_decomposition(const PartitionedGraph& g, const Decomposition& d,
                          std::string* why = nullptr);

enum class FriendshipVerdict { kConsistent, kSufficiencyViolated, kNecessityViolated };

std::string to_string(FriendshipVerdict v);

struct FriendshipReport {
  bool hall = false;
  bool decomposable = false;
  FriendshipVerdict verdict = FriendshipVerdict::kConsistent;
  std::optional<HallViolation> violation;
  std::optional<Decomposition> decomposition;
};

// Compares the Hall condition with actual decomposability on one instance.
FriendshipReport check_friendship_theorem(const PartitionedGraph& g);

}  // namespace mmx
