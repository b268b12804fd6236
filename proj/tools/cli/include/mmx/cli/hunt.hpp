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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mmx/menger.hpp"
#include "mmx/minimax.hpp"

namespace mmx::cli {

// Claims the hunter can audit.
//   t21  Hall condition <=> clique decomposition (partitioned graphs)
//   t41  line cover = line matching (multimatrices, r = 1)
//   t42  r-plane cover = r-plane matching
//   t43  vertex cover = matching (multipartite graphs)
//   t51  all-pairs separator = disjoint path system (partitioned graphs)
enum class Claim { kT21, kT41, kT42, kT43, kT51 };

Claim parse_claim(const std::string& name);
std::string to_string(Claim claim);
// File extension of the instances a claim consumes: "pg" or "mm".
std::string instance_extension(Claim claim);

struct HuntConfig {
  Claim claim = Claim::kT21;
  // Multimatrix claims use n, k; graph claims use part_sizes, or n parts of
  // size k when part_sizes is empty.
  int n = 3;
  int k = 2;
  int r = 1;
  std::vector<int> part_sizes;
  double density = 0.5;
  double intra_density = 0.0;  // t51 only
  std::uint64_t count = 1000;
  std::uint64_t seed = 0;
  bool shrink = false;
  int jobs = 1;
  std::size_t cell_budget = kDefaultCellBudget;
  int guard = kDefaultVertexGuard;
  std::optional<std::filesystem::path> out_dir;
};

struct HuntFinding {
  std::uint64_t index = 0;
  std::string instance;  // canonical text
  std::string verdict;
  std::string shrunk;    // canonical text; empty unless shrinking is on
  std::string file;
  std::string shrunk_file;
};

struct HuntSummary {
  std::uint64_t instances = 0;
  std::vector<HuntFinding> findings;  // ascending instance index
};

// Canonical text of instance `index`, drawn from derive_seed(seed, index).
std::string hunt_instance(const HuntConfig& config, std::uint64_t index);

// Empty when the instance agrees with the claim, otherwise the verdict
// (`sufficiency-violated`, `necessity-violated` or `gap=<g>`).
std::string violation(const HuntConfig& config, const std::string& instance);

// Greedy single-element removal in canonical order (1-cells or edges),
// repeated until no single removal keeps the violation.
std::string shrink(const HuntConfig& config, const std::string& instance);

// Checks every instance, in parallel when jobs > 1; findings are collected
// and written in index order.
HuntSummary hunt(const HuntConfig& config);

}  // namespace mmx::cli
