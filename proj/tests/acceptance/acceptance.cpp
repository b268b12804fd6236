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

// Acceptance suite: one PASS/FAIL line per criterion, each with a wall-clock
// limit. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"
#include "mmx/assign.hpp"
#include "mmx/cli/app.hpp"
#include "mmx/cli/report.hpp"
#include "mmx/det.hpp"
#include "mmx/format.hpp"
#include "mmx/friendship.hpp"
#include "mmx/generate.hpp"
#include "mmx/menger.hpp"
#include "mmx/minimax.hpp"
#include "mmx/random.hpp"

namespace {

using namespace mmx;
namespace fs = std::filesystem;

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<Check()> body;
};

struct CliOutcome {
  int code;
  std::string out;
};

CliOutcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "mmx");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

bool has_line(const std::string& report, const std::string& line) {
  return report.find(line + "\n") != std::string::npos;
}

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / "mmx-acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string write_file(const fs::path& path, const std::string& text) {
  std::ofstream(path) << text;
  return path.string();
}

PartitionedGraph bipartite_of(const BinaryMultimatrix& m) {
  const int k = m.shape().k();
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      if (m.at({i, j})) edges.emplace_back(i, k + j);
    }
  }
  return make_graph({k, k}, edges);
}

// The seeded two-axis instances shared by criteria 1 and 4.
std::vector<BinaryMultimatrix> two_axis_instances() {
  std::vector<BinaryMultimatrix> out;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng(derive_seed(2024, i));
    const int k = static_cast<int>(rng.between(1, 5));
    const double density = 0.2 + 0.7 * rng.uniform01();
    out.push_back(random_multimatrix(Shape(2, k), density, rng));
  }
  return out;
}

std::uint64_t factorial_power(int k, int e) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  std::uint64_t out = 1;
  for (int i = 0; i < e; ++i) out *= f;
  return out;
}

std::vector<Edge> inter_pairs(const PartitionedGraph& shell) {
  std::vector<Edge> out;
  for (int a = 1; a <= shell.vertex_count(); ++a) {
    for (int b = a + 1; b <= shell.vertex_count(); ++b) {
      if (shell.part_of(a) != shell.part_of(b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<Edge> pick(const std::vector<Edge>& pool, std::uint64_t bits) {
  std::vector<Edge> out;
  for (std::size_t e = 0; e < pool.size(); ++e) {
    if (bits >> e & 1U) out.push_back(pool[e]);
  }
  return out;
}

Check two_axis_reduction() {
  Check c;
  int n = 0;
  for (const auto& m : two_axis_instances()) {
    const auto a = oracle::as_matrix(m);
    const std::string tag = " on instance " + std::to_string(n++);
    c.expect(multideterminant(m) == oracle::bareiss_determinant(a), "determinant mismatch" + tag);
    const bool perfect = oracle::brute_perfect_matching(a);
    c.expect(hall_condition(bipartite_of(m)).holds == perfect, "hall vs perfect matching" + tag);
    c.expect(oracle::brute_hall_both_sides(a) == perfect, "oracle disagreement" + tag);
    c.expect(duality_gap(m, 1).gap == 0, "nonzero line gap" + tag);
  }
  c.detail = c.ok ? "1000 matrices, k<=5" : c.detail;
  return c;
}

Check monomial_census() {
  Check c;
  for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
    const Shape s(n, k);
    const std::uint64_t expected = factorial_power(k, n - 1);
    std::uint64_t seen = 0;
    TupleEnumerator e(s);
    do ++seen;
    while (e.next());
    const std::string tag = " at n=" + std::to_string(n) + " k=" + std::to_string(k);
    c.expect(seen == expected, "enumerated " + std::to_string(seen) + tag);
    c.expect(monomial_total(s) == expected, "monomial_total" + tag);
    const auto ones = fixture::all_ones(n, k);
    const auto count = count_nonzero_monomials(ones, expected + 1);
    c.expect(!count.capped && count.count == expected, "all-ones nonzero count" + tag);
    c.expect(multideterminant(ones) == 0, "all-ones multideterminant" + tag);
  }
  c.detail = c.ok ? "(2,3) (3,2) (3,3) (4,2): 6, 4, 36, 8 monomials" : c.detail;
  return c;
}

Check decomposition_equivalence() {
  Check c;
  const auto shell = make_graph({2, 2, 2}, {});
  const auto pool = inter_pairs(shell);
  std::uint64_t decomposable = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pool.size()); ++bits) {
    const auto g = shell.with_edges(pick(pool, bits));
    const auto d = clique_decomposition(g);
    const bool monomial = find_nonzero_monomial(tensorize(g)).has_value();
    c.expect(d.has_value() == monomial, "equivalence fails at subset " + std::to_string(bits));
    if (d) {
      ++decomposable;
      c.expect(verify_decomposition(g, *d), "verifier rejects subset " + std::to_string(bits));
    }
  }
  if (c.ok) c.detail = "4096 graphs, " + std::to_string(decomposable) + " decomposable";
  return c;
}

Check hall_sufficiency_audit() {
  Check c;
  const auto six = check_friendship_theorem(fixture::six_vertex_matchings());
  c.expect(six.hall && !six.decomposable && six.verdict == FriendshipVerdict::kSufficiencyViolated,
           "six-vertex instance verdict " + to_string(six.verdict));
  for (const auto& m : two_axis_instances()) {
    c.expect(check_friendship_theorem(bipartite_of(m)).verdict == FriendshipVerdict::kConsistent,
             "two-part instance not consistent");
  }
  // documented seed: 1
  const auto hunt = run_cli({"--seed", "1", "--quiet", "hunt", "--claim", "t21", "--n", "3", "--k", "2",
                             "--count", "10000"});
  c.expect(hunt.code == cli::kExitFinding, "hunt exit code " + std::to_string(hunt.code));
  c.expect(has_line(hunt.out, "instances = 10000"), "hunt did not scan 10000 instances");
  std::string first;
  std::istringstream lines(hunt.out);
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("first_finding = ", 0) == 0) first = line.substr(16);
  }
  if (c.ok) c.detail = "hunt --seed 1 first finding at instance " + first;
  return c;
}

Check line_duality_audit() {
  Check c;
  ScanConfig config;
  config.shape = Shape(3, 2);
  config.r = 1;
  config.mode = ScanMode::kExhaustive;
  const auto report = gap_scan(config);
  const std::map<int, std::uint64_t> golden{{0, 256}};
  c.expect(report.instances == 256, "instance count");
  c.expect(report.histogram == golden, "histogram differs from golden {0: 256}");
  for (const auto& [gap, count] : report.histogram) c.expect(gap >= 0, "negative gap");
  for (std::uint64_t bits = 0; bits < 256; ++bits) {
    const auto m = fixture::from_bits(config.shape, bits);
    c.expect(scan_instance(config, bits) == m, "scan encoding");
    const auto cover = min_line_cover(m);
    const auto matching = max_line_matching(m);
    c.expect(cover.size() >= matching.size(), "alpha < beta at " + std::to_string(bits));
    c.expect(cover.size() == oracle::brute_min_cover(m, 1), "cover oracle at " + std::to_string(bits));
    c.expect(matching.size() == oracle::brute_max_matching(m, 1),
             "matching oracle at " + std::to_string(bits));
  }
  c.detail = c.ok ? "256 instances, histogram gap=0:256, oracles agree" : c.detail;
  return c;
}

Check plane_audit() {
  Check c;
  Rng rng(4242);
  int full = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.between(2, 4));
    const int k = static_cast<int>(rng.between(1, 3));
    const auto m = random_multimatrix(Shape(n, k), 0.05 + 0.9 * rng.uniform01(), rng);
    if (m.count_ones() == 0) continue;
    ++full;
    const auto g = duality_gap(m, n);
    c.expect(g.alpha == 1 && g.beta == 1, "r=n gives alpha=" + std::to_string(g.alpha) +
                                               " beta=" + std::to_string(g.beta));
  }
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = random_multimatrix(Shape(3, 2), rng.uniform01(), rng);
    const auto g = duality_gap(m, 1);
    c.expect(g.alpha == min_line_cover(m).size() && g.beta == max_line_matching(m).size(),
             "r=1 differs from line solvers");
    c.expect(g.alpha == oracle::brute_min_cover(m, 1) && g.beta == oracle::brute_max_matching(m, 1),
             "r=1 differs from oracles");
  }
  if (c.ok) c.detail = std::to_string(full) + " nonzero r=n instances, 50 line instances";
  return c;
}

Check assignment_exactness() {
  Check c;
  Rng rng(777);
  int solved = 0;
  const auto family = [&](int n, int kmax) {
    for (int i = 0; i < 100; ++i) {
      const int k = static_cast<int>(rng.between(1, kmax));
      const auto cost = random_cost_multimatrix(Shape(n, k), 0, i % 3 == 0 ? 3 : 50, rng);
      const auto exact = brute_force_assign(cost);
      const auto bb = solve_axial_map(cost).assignment;
      c.expect(bb.cost == exact.cost && bb.tuple == exact.tuple,
               "branch and bound differs at n=" + std::to_string(n) + " k=" + std::to_string(k));
      ++solved;
    }
  };
  family(2, 6);
  family(3, 3);
  family(4, 2);
  std::uint64_t identities = 0;
  for (int i = 0; i < 20; ++i) {
    const int n = static_cast<int>(rng.between(2, 4));
    const int k = n == 4 ? 2 : 3;
    const auto cost = random_cost_multimatrix(Shape(n, k), -20, 20, rng);
    const auto red = reduction_bound(cost);
    TupleEnumerator e(cost.shape());
    do {
      c.expect(assignment_cost(cost, e.current()) ==
                   red.lower_bound + assignment_cost(red.reduced, e.current()),
               "accounting identity fails");
      ++identities;
    } while (e.next());
  }
  if (c.ok) {
    c.detail = std::to_string(solved) + " instances exact, " + std::to_string(identities) +
               " identity checks";
  }
  return c;
}

Check cover_matching_audit(const fs::path& dir) {
  Check c;
  const auto shell = make_graph({3, 4}, {});
  const auto pool = inter_pairs(shell);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pool.size()); ++bits) {
    const auto edges = pick(pool, bits);
    const auto r = check_cover_matching(shell.with_edges(edges));
    c.expect(r.gap == 0, "bipartite gap at subset " + std::to_string(bits));
    c.expect(r.cover.size() == oracle::brute_vertex_cover(7, edges) &&
                 r.matching.size() == oracle::dp_max_matching(7, edges),
             "oracle disagreement at subset " + std::to_string(bits));
  }
  const auto tri = write_file(dir / "triangle.pg", serialize(fixture::triangle()));
  const auto out = run_cli({"check-t43", tri});
  c.expect(out.code == cli::kExitFinding, "triangle exit code " + std::to_string(out.code));
  c.expect(has_line(out.out, "cover = 2") && has_line(out.out, "matching = 1") &&
               has_line(out.out, "gap = 1"),
           "triangle report");
  c.detail = c.ok ? "4096 bipartite graphs gap 0; triangle 2 vs 1, exit 3" : c.detail;
  return c;
}

Check separator_paths_audit(const fs::path& dir) {
  Check c;
  std::uint64_t graphs = 0;
  for (int v = 2; v <= 6; ++v) {
    std::vector<Edge> all;
    for (int a = 1; a <= v; ++a) {
      for (int b = a + 1; b <= v; ++b) all.emplace_back(a, b);
    }
    for (int left = 1; left < v; ++left) {
      const auto shell = make_graph({left, v - left}, {});
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << all.size()); ++bits) {
        const auto g = shell.with_edges(pick(all, bits));
        const auto r = check_separator_paths(g);
        ++graphs;
        if (r.gap != 0) {
          c.expect(false, "gap on " + std::to_string(v) + " vertices, subset " + std::to_string(bits));
        }
        const auto inter = oracle::inter_part_edges(g);
        c.expect(r.separator.size() == oracle::brute_vertex_cover(v, inter),
                 "separator oracle disagreement");
      }
    }
  }
  const auto tri = write_file(dir / "triangle.pg", serialize(fixture::triangle()));
  const auto out = run_cli({"check-t51", tri});
  c.expect(out.code == cli::kExitFinding, "triangle exit code " + std::to_string(out.code));
  c.expect(has_line(out.out, "separator = 2") && has_line(out.out, "paths = 1"), "triangle report");
  if (c.ok) c.detail = std::to_string(graphs) + " two-part graphs gap 0; triangle 2 vs 1, exit 3";
  return c;
}

Check determinism(const fs::path& dir) {
  Check c;
  const auto mm = write_file(dir / "m.mm", "mm 3 2 sparse\n1 1 1 1\n1 2 2 1\n2 1 2 1\n2 2 1 1\n");
  const auto cmm = write_file(dir / "c.cmm", "cmm 3 2 dense\n1 2 3/2 4\n0 5 2 -1\n");
  const auto pg = write_file(dir / "g.pg", serialize(fixture::six_vertex_matchings()));
  const auto out = (dir / "out").string();
  const std::vector<std::vector<std::string>> commands{
      {"det", mm},
      {"monomial-find", mm},
      {"monomial-count", mm},
      {"hall-check", pg},
      {"decompose", pg},
      {"check-t21", pg},
      {"line-cover", mm},
      {"line-matching", mm},
      {"rplane-cover", "--r", "2", mm},
      {"rplane-matching", "--r", "2", mm},
      {"gap", mm},
      {"gap-scan", "--n", "3", "--k", "2"},
      {"assign", cmm},
      {"cover-match", pg},
      {"menger", pg},
      {"check-t43", pg},
      {"check-t51", pg},
      {"--seed", "9", "gen", "multimatrix", "--n", "3", "--k", "3"},
      {"--seed", "9", "gen", "costmatrix", "--n", "3", "--k", "3"},
      {"--seed", "9", "--out", out, "gen", "graph", "--parts", "3", "--part-size", "3"},
      {"--seed", "9", "--out", out, "hunt", "--claim", "t21", "--count", "500", "--shrink"},
  };
  for (const auto& cmd : commands) {
    const auto a = run_cli(cmd);
    const auto b = run_cli(cmd);
    c.expect(a.code != cli::kExitInputError && !a.out.empty(), "'" + cmd.front() + "' failed");
    c.expect(a.code == b.code && cli::strip_timing(a.out) == cli::strip_timing(b.out),
             "'" + cmd.front() + "' differs between runs");
  }
  const auto parallel = [&](std::vector<std::string> tail) {
    auto one = tail;
    one.insert(one.begin(), {"--seed", "3", "--jobs", "1"});
    auto four = tail;
    four.insert(four.begin(), {"--seed", "3", "--jobs", "4"});
    const auto a = run_cli(one);
    const auto b = run_cli(four);
    const auto again = run_cli(four);
    return a.code == b.code && cli::strip_timing(a.out) == cli::strip_timing(b.out) &&
           cli::strip_timing(b.out) == cli::strip_timing(again.out);
  };
  c.expect(parallel({"gap-scan", "--n", "3", "--k", "3", "--mode", "random", "--count", "200"}),
           "parallel gap-scan differs");
  c.expect(parallel({"hunt", "--claim", "t21", "--count", "1000", "--shrink"}), "parallel hunt differs");
  c.expect(parallel({"hunt", "--claim", "t43", "--n", "3", "--k", "2", "--count", "300", "--shrink"}),
           "parallel t43 hunt differs");
  if (c.ok) c.detail = std::to_string(commands.size()) + " invocations twice, 3 parallel runs at 1 and 4 jobs";
  return c;
}

}  // namespace

int main() {
  const auto dir = scratch_dir();
  const std::vector<Criterion> criteria{
      {1, "two-axis reduction", 10, two_axis_reduction},
      {2, "monomial census", 5, monomial_census},
      {3, "decomposition equivalence", 60, decomposition_equivalence},
      {4, "hall sufficiency audit", 30, hall_sufficiency_audit},
      {5, "line duality audit", 60, line_duality_audit},
      {6, "full-plane and line audit", 10, plane_audit},
      {7, "assignment exactness", 30, assignment_exactness},
      {8, "cover-matching audit", 60, [&] { return cover_matching_audit(dir); }},
      {9, "separator-paths audit", 120, [&] { return separator_paths_audit(dir); }},
      {10, "determinism", 60, [&] { return determinism(dir); }},
  };
  int failed = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check result;
    try {
      result = criterion.body();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < criterion.limit_s;
    const bool pass = result.ok && in_time;
    if (!pass) ++failed;
    std::printf("%s %2d %-28s %7.2fs (limit %3.0fs)  %s%s\n", pass ? "PASS" : "FAIL", criterion.id,
                criterion.name.c_str(), seconds, criterion.limit_s, result.detail.c_str(),
                in_time ? "" : " [over time limit]");
    std::fflush(stdout);
  }
  fs::remove_all(dir);
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
