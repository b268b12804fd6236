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

#include "mmx/minimax.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

#include "mmx/error.hpp"
#include "mmx/format.hpp"
#include "mmx/parallel.hpp"
#include "mmx/random.hpp"

namespace mmx {
namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

void check_budget(const Shape& shape, std::size_t cell_budget) {
  if (shape.cell_count() > cell_budget) {
    throw FeasibilityError("instance has " + std::to_string(shape.cell_count()) +
                           " cells, cell budget is " + std::to_string(cell_budget));
  }
}

void check_r(const Shape& shape, int r) {
  if (r < 1 || r > shape.n()) {
    throw InputError("r must lie in 1.." + std::to_string(shape.n()) + ", got " + std::to_string(r));
  }
}

// The 1-cells of an instance with their pairwise r-plane conflicts.
struct ConflictGraph {
  std::vector<Coord> cells;
  std::vector<Bits> conflicts;

  ConflictGraph(const BinaryMultimatrix& m, int r) : cells(m.ones()) {
    const std::size_t count = cells.size();
    const int n = m.shape().n();
    conflicts.assign(count, Bits(count));
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = a + 1; b < count; ++b) {
        const int same = agreement(cells[a], cells[b]);
        if (same >= n - r) {
          conflicts[a].set(b);
          conflicts[b].set(a);
        }
      }
    }
  }

  // Greedy independent subset of `pool`, visited in ascending order.
  std::size_t greedy_independent(const Bits& pool) const {
    Bits blocked(pool.size());
    std::size_t picked = 0;
    for (auto c = pool.find_first(); c != Bits::npos; c = pool.find_next(c)) {
      if (blocked.test(c)) continue;
      ++picked;
      blocked |= conflicts[c];
    }
    return picked;
  }
};

class CoverSearch {
 public:
  CoverSearch(const BinaryMultimatrix& m, int r) : graph_(m, r), planes_(rplanes_of(m.shape(), r)) {
    const std::size_t count = graph_.cells.size();
    masks_.assign(planes_.size(), Bits(count));
    containing_.assign(count, {});
    for (std::size_t p = 0; p < planes_.size(); ++p) {
      for (std::size_t c = 0; c < count; ++c) {
        if (rplane_contains(planes_[p], graph_.cells[c])) {
          masks_[p].set(c);
          containing_[c].push_back(p);
        }
      }
    }
  }

  CoverCertificate solve(int r) {
    Bits all(graph_.cells.size());
    all.set();
    const std::size_t upper = greedy_upper(all);
    std::size_t alpha = graph_.greedy_independent(all);
    while (alpha < upper && !coverable(all, alpha, 0)) ++alpha;

    // Build the lexicographically least optimal set one slot at a time.
    CoverCertificate cert;
    cert.r = r;
    Bits uncovered = all;
    std::size_t from = 0;
    for (std::size_t slot = 0; slot < alpha; ++slot) {
      std::size_t chosen = planes_.size();
      for (std::size_t p = from; p < planes_.size(); ++p) {
        if (!masks_[p].intersects(uncovered)) continue;
        Bits rest = uncovered - masks_[p];
        if (coverable(rest, alpha - slot - 1, p + 1)) {
          chosen = p;
          uncovered = std::move(rest);
          break;
        }
      }
      if (chosen == planes_.size()) throw std::logic_error("cover reconstruction failed");
      cert.planes.push_back(planes_[chosen]);
      from = chosen + 1;
    }
    return cert;
  }

 private:
  std::size_t greedy_upper(Bits uncovered) const {
    std::size_t used = 0;
    while (uncovered.any()) {
      std::size_t best = 0;
      std::size_t best_gain = 0;
      for (std::size_t p = 0; p < planes_.size(); ++p) {
        const std::size_t gain = (masks_[p] & uncovered).count();
        if (gain > best_gain) {
          best_gain = gain;
          best = p;
        }
      }
      uncovered -= masks_[best];
      ++used;
    }
    return used;
  }

  // Can `uncovered` be covered with at most `budget` planes of index >= `from`?
  bool coverable(const Bits& uncovered, std::size_t budget, std::size_t from) const {
    if (uncovered.none()) return true;
    if (budget == 0) return false;
    if (graph_.greedy_independent(uncovered) > budget) return false;
    // Branch on the uncovered cell with the fewest admissible planes.
    std::size_t pivot = Bits::npos;
    std::size_t fewest = SIZE_MAX;
    for (auto c = uncovered.find_first(); c != Bits::npos; c = uncovered.find_next(c)) {
      std::size_t options = 0;
      for (std::size_t p : containing_[c]) options += p >= from;
      if (options == 0) return false;
      if (options < fewest) {
        fewest = options;
        pivot = c;
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (std::size_t p : containing_[pivot]) {
      if (p >= from) order.emplace_back((masks_[p] & uncovered).count(), p);
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [gain, p] : order) {
      if (coverable(uncovered - masks_[p], budget - 1, from)) return true;
    }
    return false;
  }

  ConflictGraph graph_;
  std::vector<RPlaneId> planes_;
  std::vector<Bits> masks_;
  std::vector<std::vector<std::size_t>> containing_;
};

// Branch-and-bound maximum independent set of the conflict graph. Branches
// pick the next cell in ascending order, so the first solution of each new
// best size is the lexicographically least one of that size.
class MatchingSearch {
 public:
  MatchingSearch(const BinaryMultimatrix& m, int r) : graph_(m, r) {}

  MatchingCertificate solve(int r) {
    const std::size_t count = graph_.cells.size();
    Bits all(count);
    all.set();
    const std::size_t greedy = graph_.greedy_independent(all);
    // Accept the first solution at least as large as the greedy one.
    best_size_ = greedy == 0 ? 0 : greedy - 1;
    std::vector<std::size_t> chosen;
    if (count > 0) expand(all, chosen);
    MatchingCertificate cert;
    cert.r = r;
    for (std::size_t c : best_) cert.cells.push_back(graph_.cells[c]);
    return cert;
  }

 private:
  // Upper bound: number of cliques in a greedy clique partition of `pool`.
  std::size_t clique_bound(Bits pool) const {
    std::size_t cliques = 0;
    while (pool.any()) {
      const std::size_t first = pool.find_first();
      Bits clique_candidates = graph_.conflicts[first] & pool;
      pool.reset(first);
      for (auto c = clique_candidates.find_first(); c != Bits::npos;
           c = clique_candidates.find_next(c)) {
        pool.reset(c);
        clique_candidates &= graph_.conflicts[c];
      }
      ++cliques;
    }
    return cliques;
  }

  void expand(Bits candidates, std::vector<std::size_t>& chosen) {
    if (chosen.size() > best_size_) {
      best_size_ = chosen.size();
      best_ = chosen;
    }
    for (auto c = candidates.find_first(); c != Bits::npos; c = candidates.find_next(c)) {
      if (chosen.size() + clique_bound(candidates) <= best_size_) return;
      // `candidates` holds no cell below c, so chosen sets stay ascending.
      Bits next = candidates - graph_.conflicts[c];
      next.reset(c);
      chosen.push_back(c);
      expand(next, chosen);
      chosen.pop_back();
      candidates.reset(c);
    }
  }

  ConflictGraph graph_;
  std::size_t best_size_ = 0;
  std::vector<std::size_t> best_;
};

}  // namespace

CoverCertificate min_rplane_cover(const BinaryMultimatrix& m, int r, std::size_t cell_budget) {
  check_r(m.shape(), r);
  check_budget(m.shape(), cell_budget);
  return CoverSearch(m, r).solve(r);
}

MatchingCertificate max_rplane_matching(const BinaryMultimatrix& m, int r,
                                        std::size_t cell_budget) {
  check_r(m.shape(), r);
  check_budget(m.shape(), cell_budget);
  return MatchingSearch(m, r).solve(r);
}

bool verify_cover(const BinaryMultimatrix& m, const CoverCertificate& cover, std::string* why) {
  for (const auto& plane : cover.planes) {
    if (plane.r() != cover.r) {
      if (why) *why = "plane " + format_rplane(plane) + " has the wrong dimension";
      return false;
    }
    try {
      check_rplane(m.shape(), plane);
    } catch (const InputError& e) {
      if (why) *why = e.what();
      return false;
    }
  }
  for (const auto& c : m.ones()) {
    const bool hit = std::any_of(cover.planes.begin(), cover.planes.end(),
                                 [&](const RPlaneId& p) { return rplane_contains(p, c); });
    if (!hit) {
      if (why) *why = "cell " + format_coord(c) + " is not covered";
      return false;
    }
  }
  return true;
}

bool verify_matching(const BinaryMultimatrix& m, const MatchingCertificate& matching,
                     std::string* why) {
  for (std::size_t a = 0; a < matching.cells.size(); ++a) {
    const Coord& p = matching.cells[a];
    if (!m.shape().contains(p) || !m.at(p)) {
      if (why) *why = "cell " + format_coord(p) + " is not a 1";
      return false;
    }
    for (std::size_t b = a + 1; b < matching.cells.size(); ++b) {
      const Coord& q = matching.cells[b];
      if (p == q || same_rplane(m.shape(), matching.r, p, q)) {
        if (why) *why = "cells " + format_coord(p) + " and " + format_coord(q) + " conflict";
        return false;
      }
    }
  }
  return true;
}

GapReport duality_gap(const BinaryMultimatrix& m, int r, std::size_t cell_budget) {
  GapReport report;
  report.r = r;
  report.cover = min_rplane_cover(m, r, cell_budget);
  report.matching = max_rplane_matching(m, r, cell_budget);
  report.alpha = report.cover.size();
  report.beta = report.matching.size();
  report.gap = report.alpha - report.beta;
  if (report.gap < 0) throw std::logic_error("weak duality violated: solver defect");
  return report;
}

BinaryMultimatrix scan_instance(const ScanConfig& config, std::uint64_t index) {
  const std::size_t cells = config.shape.cell_count();
  std::vector<std::uint8_t> values(cells, 0);
  if (config.mode == ScanMode::kExhaustive) {
    for (std::size_t c = 0; c < cells; ++c) values[c] = (index >> c) & 1U;
  } else {
    Rng rng(derive_seed(config.seed, index));
    for (std::size_t c = 0; c < cells; ++c) values[c] = rng.bernoulli(config.density) ? 1 : 0;
  }
  return BinaryMultimatrix(config.shape, std::move(values));
}

ScanReport gap_scan(const ScanConfig& config) {
  check_r(config.shape, config.r);
  check_budget(config.shape, config.cell_budget);
  std::uint64_t total = config.count;
  if (config.mode == ScanMode::kExhaustive) {
    const std::size_t cells = config.shape.cell_count();
    if (cells >= 63 || (std::uint64_t{1} << cells) > config.scan_budget) {
      throw FeasibilityError("exhaustive scan needs 2^" + std::to_string(cells) +
                             " instances, scan budget is " + std::to_string(config.scan_budget));
    }
    total = std::uint64_t{1} << cells;
  } else {
    if (config.count > config.scan_budget) {
      throw FeasibilityError("random scan of " + std::to_string(config.count) +
                             " instances exceeds scan budget " +
                             std::to_string(config.scan_budget));
    }
    if (!(config.density >= 0.0 && config.density <= 1.0)) {
      throw InputError("density must lie in [0, 1]");
    }
  }

  struct Outcome {
    int alpha = 0;
    int beta = 0;
  };
  std::vector<Outcome> outcomes(total);
  parallel_for(total, config.jobs, [&](std::uint64_t i) {
    const auto report = duality_gap(scan_instance(config, i), config.r, config.cell_budget);
    outcomes[i] = {report.alpha, report.beta};
  });

  ScanReport report;
  report.instances = total;
  if (config.out_dir) std::filesystem::create_directories(*config.out_dir);
  for (std::uint64_t i = 0; i < total; ++i) {
    const int gap = outcomes[i].alpha - outcomes[i].beta;
    ++report.histogram[gap];
    if (gap <= 0) continue;
    ScanFinding finding{i, scan_instance(config, i), outcomes[i].alpha, outcomes[i].beta, {}};
    if (config.out_dir) {
      std::ostringstream name;
      name << "gap-n" << config.shape.n() << "k" << config.shape.k() << "-r" << config.r << '-'
           << std::setw(8) << std::setfill('0') << i << ".mm";
      const auto path = *config.out_dir / name.str();
      std::ofstream out(path, std::ios::binary);
      out << serialize(finding.instance);
      if (!out) throw std::runtime_error("cannot write " + path.string());
      finding.file = path.string();
    }
    report.findings.push_back(std::move(finding));
  }
  return report;
}

}  // namespace mmx
