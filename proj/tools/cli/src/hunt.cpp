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

#include "mmx/cli/hunt.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "mmx/error.hpp"
#include "mmx/format.hpp"
#include "mmx/friendship.hpp"
#include "mmx/generate.hpp"
#include "mmx/graph.hpp"
#include "mmx/parallel.hpp"
#include "mmx/random.hpp"

namespace mmx::cli {
namespace {

bool graph_claim(Claim c) { return c == Claim::kT21 || c == Claim::kT43 || c == Claim::kT51; }

std::vector<int> part_sizes(const HuntConfig& config) {
  if (!config.part_sizes.empty()) return config.part_sizes;
  return std::vector<int>(static_cast<std::size_t>(config.n), config.k);
}

int claim_r(const HuntConfig& config) { return config.claim == Claim::kT41 ? 1 : config.r; }

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace

Claim parse_claim(const std::string& name) {
  if (name == "t21") return Claim::kT21;
  if (name == "t41") return Claim::kT41;
  if (name == "t42") return Claim::kT42;
  if (name == "t43") return Claim::kT43;
  if (name == "t51") return Claim::kT51;
  throw InputError("unknown claim '" + name + "', expected t21, t41, t42, t43 or t51");
}

std::string to_string(Claim claim) {
  switch (claim) {
    case Claim::kT21: return "t21";
    case Claim::kT41: return "t41";
    case Claim::kT42: return "t42";
    case Claim::kT43: return "t43";
    case Claim::kT51: return "t51";
  }
  return "unknown";
}

std::string instance_extension(Claim claim) { return graph_claim(claim) ? "pg" : "mm"; }

std::string hunt_instance(const HuntConfig& config, std::uint64_t index) {
  Rng rng(derive_seed(config.seed, index));
  if (graph_claim(config.claim)) {
    const double intra = config.claim == Claim::kT51 ? config.intra_density : 0.0;
    return serialize(random_partitioned_graph(part_sizes(config), config.density, intra, rng));
  }
  return serialize(random_multimatrix(Shape(config.n, config.k), config.density, rng));
}

std::string violation(const HuntConfig& config, const std::string& instance) {
  switch (config.claim) {
    case Claim::kT21: {
      const auto report = check_friendship_theorem(parse_graph(instance));
      if (report.verdict == FriendshipVerdict::kConsistent) return {};
      return mmx::to_string(report.verdict);
    }
    case Claim::kT41:
    case Claim::kT42: {
      const auto report = duality_gap(parse_binary(instance), claim_r(config), config.cell_budget);
      if (report.gap == 0) return {};
      return "gap=" + std::to_string(report.gap);
    }
    case Claim::kT43: {
      const auto report = check_cover_matching(parse_graph(instance), config.guard);
      if (report.gap == 0) return {};
      return "gap=" + std::to_string(report.gap);
    }
    case Claim::kT51: {
      const auto report = check_separator_paths(parse_graph(instance), config.guard);
      if (report.gap == 0) return {};
      return "gap=" + std::to_string(report.gap);
    }
  }
  return {};
}

std::string shrink(const HuntConfig& config, const std::string& instance) {
  std::string current = instance;
  if (graph_claim(config.claim)) {
    PartitionedGraph g = parse_graph(current);
    for (bool changed = true; changed;) {
      changed = false;
      const auto edges = g.edges();
      for (std::size_t i = 0; i < edges.size(); ++i) {
        auto fewer = edges;
        fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
        PartitionedGraph candidate = g.with_edges(std::move(fewer));
        const std::string text = serialize(candidate);
        if (!violation(config, text).empty()) {
          g = std::move(candidate);
          current = text;
          changed = true;
          break;
        }
      }
    }
    return current;
  }
  BinaryMultimatrix m = parse_binary(current);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& c : m.ones()) {
      BinaryMultimatrix candidate = m.with(c, false);
      const std::string text = serialize(candidate);
      if (!violation(config, text).empty()) {
        m = std::move(candidate);
        current = text;
        changed = true;
        break;
      }
    }
  }
  return current;
}

HuntSummary hunt(const HuntConfig& config) {
  if (!graph_claim(config.claim)) {
    const Shape shape(config.n, config.k);
    if (claim_r(config) < 1 || claim_r(config) > shape.n()) {
      throw InputError("r must lie in 1.." + std::to_string(shape.n()));
    }
    if (shape.cell_count() > config.cell_budget) {
      throw FeasibilityError("instance has " + std::to_string(shape.cell_count()) +
                             " cells, cell budget is " + std::to_string(config.cell_budget));
    }
  }
  std::vector<std::optional<HuntFinding>> slots(config.count);
  parallel_for(config.count, config.jobs, [&](std::uint64_t i) {
    std::string text = hunt_instance(config, i);
    std::string verdict = violation(config, text);
    if (verdict.empty()) return;
    HuntFinding f;
    f.index = i;
    f.verdict = std::move(verdict);
    if (config.shrink) f.shrunk = shrink(config, text);
    f.instance = std::move(text);
    slots[i] = std::move(f);
  });

  HuntSummary summary;
  summary.instances = config.count;
  if (config.out_dir) std::filesystem::create_directories(*config.out_dir);
  for (auto& slot : slots) {
    if (!slot) continue;
    HuntFinding f = std::move(*slot);
    if (config.out_dir) {
      std::ostringstream stem;
      stem << to_string(config.claim) << '-' << std::setw(8) << std::setfill('0') << f.index;
      const std::string ext = "." + instance_extension(config.claim);
      const auto path = *config.out_dir / (stem.str() + ext);
      write_file(path, f.instance);
      f.file = path.string();
      if (config.shrink) {
        const auto shrunk_path = *config.out_dir / (stem.str() + "-shrunk" + ext);
        write_file(shrunk_path, f.shrunk);
        f.shrunk_file = shrunk_path.string();
      }
    }
    summary.findings.push_back(std::move(f));
  }
  return summary;
}

}  // namespace mmx::cli
