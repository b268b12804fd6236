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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mmx/multimatrix.hpp"
#include "mmx/shape.hpp"

namespace mmx {

inline constexpr std::size_t kDefaultCellBudget = 4096;

// A set of r-planes containing every 1-cell. Planes are sorted in the
// rplanes_of order; for r = 1 they are lines.
struct CoverCertificate {
  int r = 1;
  std::vector<RPlaneId> planes;

  int size() const noexcept { return static_cast<int>(planes.size()); }
};

// 1-cells of which no two share an r-plane, in dense order.
struct MatchingCertificate {
  int r = 1;
  std::vector<Coord> cells;

  int size() const noexcept { return static_cast<int>(cells.size()); }
};

// Exact minimum cover by r-planes (planes of different free-axis sets may be
// mixed). Returns the lexicographically least optimal plane set under the
// rplanes_of order. Throws FeasibilityError when k^n exceeds `cell_budget`,
// InputError when r is outside 1..n.
CoverCertificate min_rplane_cover(const BinaryMultimatrix& m, int r,
                                  std::size_t cell_budget = kDefaultCellBudget);

// Exact maximum set of 1-cells with no two in a common r-plane; returns the
// lexicographically least optimal cell set under dense order.
MatchingCertificate max_rplane_matching(const BinaryMultimatrix& m, int r,
                                        std::size_t cell_budget = kDefaultCellBudget);

inline CoverCertificate min_line_cover(const BinaryMultimatrix& m,
                                       std::size_t cell_budget = kDefaultCellBudget) {
  return min_rplane_cover(m, 1, cell_budget);
}

inline MatchingCertificate max_line_matching(const BinaryMultimatrix& m,
                                             std::size_t cell_budget = kDefaultCellBudget) {
  return max_rplane_matching(m, 1, cell_budget);
}

bool verify_cover(const BinaryMultimatrix& m, const CoverCertificate& cover,
                  std::string* why = nullptr);
bool verify_matching(const BinaryMultimatrix& m, const MatchingCertificate& matching,
                     std::string* why = nullptr);

struct GapReport {
  int r = 1;
  int alpha = 0;
  int beta = 0;
  int gap = 0;
  CoverCertificate cover;
  MatchingCertificate matching;
};

// alpha = min cover, beta = max matching, gap = alpha - beta (never negative).
GapReport duality_gap(const BinaryMultimatrix& m, int r,
                      std::size_t cell_budget = kDefaultCellBudget);

enum class ScanMode { kExhaustive, kRandom };

struct ScanConfig {
  Shape shape{3, 2};
  int r = 1;
  ScanMode mode = ScanMode::kExhaustive;
  // Random mode only.
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  double density = 0.5;
  // Exhaustive mode requires 2^(k^n) <= scan_budget.
  std::uint64_t scan_budget = std::uint64_t{1} << 20;
  std::size_t cell_budget = kDefaultCellBudget;
  int jobs = 1;
  // When set, every instance with a positive gap is written there.
  std::optional<std::filesystem::path> out_dir;
};

struct ScanFinding {
  std::uint64_t index = 0;
  BinaryMultimatrix instance;
  int alpha = 0;
  int beta = 0;
  std::string file;  // empty when nothing was written
};

struct ScanReport {
  std::uint64_t instances = 0;
  std::map<int, std::uint64_t> histogram;  // gap -> instance count
  std::vector<ScanFinding> findings;       // ascending instance index
};

// Exhaustive mode visits instance i = 0 .. 2^(k^n)-1 where dense cell c is 1
// iff bit c of i is set. Random mode draws instance i from derive_seed(seed, i)
// with each cell 1 with probability `density`. Results merge in index order.
ScanReport gap_scan(const ScanConfig& config);

// The instance gap_scan visits at `index`.
BinaryMultimatrix scan_instance(const ScanConfig& config, std::uint64_t index);

}  // namespace mmx
