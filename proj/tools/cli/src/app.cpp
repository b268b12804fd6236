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

#include "mmx/cli/app.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mmx/assign.hpp"
#include "mmx/cli/hunt.hpp"
#include "mmx/cli/report.hpp"
#include "mmx/det.hpp"
#include "mmx/digest.hpp"
#include "mmx/error.hpp"
#include "mmx/format.hpp"
#include "mmx/friendship.hpp"
#include "mmx/generate.hpp"
#include "mmx/graph.hpp"
#include "mmx/menger.hpp"
#include "mmx/minimax.hpp"
#include "mmx/parallel.hpp"
#include "mmx/random.hpp"

namespace mmx::cli {
namespace {

constexpr std::uint64_t kDefaultScanBudget = std::uint64_t{1} << 20;
constexpr std::uint64_t kDefaultMonomialCap = 10'000'000;

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::string out_dir;
  std::optional<long long> guard;
  std::optional<std::uint64_t> budget;
  bool quiet = false;
  int jobs = 1;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string digest_of(const std::string& canonical) { return "sha256:" + sha256_hex(canonical); }

std::string join_vertices(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(vs[i]);
  }
  return out;
}

std::string join_ints(const std::vector<int>& vs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(vs[i]);
  }
  return out;
}

std::vector<std::string> coord_lines(const std::vector<Coord>& cells) {
  std::vector<std::string> out;
  for (const auto& c : cells) out.push_back(format_coord(c));
  return out;
}

std::vector<std::string> plane_lines(const CoverCertificate& cover) {
  std::vector<std::string> out;
  for (const auto& p : cover.planes) {
    out.push_back(cover.r == 1 ? "line " + format_line(to_line(p)) : "plane " + format_rplane(p));
  }
  return out;
}

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) throw InputError("");
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("invalid part size list '" + text + "'");
    }
  }
  if (out.empty()) throw InputError("empty part size list");
  return out;
}

// Shared plumbing for subcommands that read instance files.
class Runner {
 public:
  Runner(const GlobalOptions& opts, std::ostream& out) : opts_(opts), out_(out) {}

  std::size_t cell_budget(std::size_t fallback) const {
    return opts_.guard ? static_cast<std::size_t>(std::max(0LL, *opts_.guard)) : fallback;
  }
  int vertex_guard() const {
    return opts_.guard ? static_cast<int>(*opts_.guard) : kDefaultVertexGuard;
  }
  std::uint64_t budget(std::uint64_t fallback) const { return opts_.budget.value_or(fallback); }
  int jobs() const { return opts_.jobs; }
  const GlobalOptions& options() const { return opts_; }

  // Runs `body` for each file, emitting one report per file. Returns the
  // finding exit code when any body reports a finding.
  int each_file(const std::string& command, const std::vector<std::string>& files,
                const std::function<bool(const std::string& text, Report&)>& body) {
    bool finding = false;
    for (std::size_t i = 0; i < files.size(); ++i) {
      const auto start = std::chrono::steady_clock::now();
      Report report(command);
      report.set("input", files[i]);
      finding |= body(read_input(files[i]), report);
      emit(report, start);
      if (i + 1 < files.size()) out_ << '\n';
    }
    return finding ? kExitFinding : kExitOk;
  }

  void emit(Report& report, std::chrono::steady_clock::time_point start) {
    const std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - start;
    report.timing(elapsed.count());
    out_ << report.render(!opts_.quiet);
  }

 private:
  const GlobalOptions& opts_;
  std::ostream& out_;
};

void describe_shape(Report& r, const Shape& s) {
  r.set("n", s.n());
  r.set("k", s.k());
}

BinaryMultimatrix load_binary(const std::string& text, Report& r) {
  BinaryMultimatrix m = parse_binary(text);
  r.set("instance", digest_of(serialize(m)));
  describe_shape(r, m.shape());
  return m;
}

PartitionedGraph load_graph(const std::string& text, Report& r) {
  PartitionedGraph g = parse_graph(text);
  r.set("instance", digest_of(serialize(g)));
  r.set("parts", g.part_count());
  r.set("vertices", g.vertex_count());
  r.set("edges", static_cast<unsigned long long>(g.edges().size()));
  return g;
}

void add_gap_fields(Report& r, const GapReport& gap) {
  r.set("r", gap.r);
  r.set("alpha", gap.alpha);
  r.set("beta", gap.beta);
  r.set("gap", gap.gap);
  r.set("verdict", gap.gap == 0 ? "equal" : "gap");
  r.block("cover", plane_lines(gap.cover));
  r.block("matching", coord_lines(gap.matching.cells));
}

std::vector<std::string> decomposition_lines(const Decomposition& d) {
  std::vector<std::string> out;
  for (const auto& set : d.sets) out.push_back(join_vertices(set));
  return out;
}

void add_violation(Report& r, const std::optional<HallViolation>& v) {
  if (!v) return;
  r.set("violation_pair", std::to_string(v->from_part) + "->" + std::to_string(v->to_part));
  r.set("violation_subset", join_vertices(v->subset));
  r.set("violation_neighborhood", join_vertices(v->neighborhood));
  r.set("deficiency", v->deficiency);
}

std::vector<std::string> edge_lines(const std::vector<Edge>& edges) {
  std::vector<std::string> out;
  for (auto [u, v] : edges) out.push_back(std::to_string(u) + " " + std::to_string(v));
  return out;
}

std::vector<std::string> path_lines(const PathSystem& p) {
  std::vector<std::string> out;
  for (const auto& path : p.paths) out.push_back(join_vertices(path));
  return out;
}

struct GenOptions {
  std::string kind;
  int n = 3;
  int k = 2;
  double density = 0.5;
  long long min_cost = 0;
  long long max_cost = 9;
  int parts = 3;
  int part_size = 2;
  std::string sizes;
  double intra_density = 0.0;
};

struct ScanOptions {
  int n = 3;
  int k = 2;
  int r = 1;
  std::string mode = "exhaustive";
  std::uint64_t count = 1000;
  double density = 0.5;
};

struct HuntOptions {
  std::string claim = "t21";
  int n = 3;
  int k = 2;
  int r = 1;
  std::string sizes;
  double density = 0.5;
  double intra_density = 0.0;
  std::uint64_t count = 1000;
  bool shrink = false;
};

constexpr const char* kDescription =
    "mmx: exact multimatrix combinatorics and minimax audits.\n"
    "Exit codes: 0 ok, 1 input error, 2 size guard or budget exceeded,\n"
    "3 a gap or violated verdict was produced, 4 internal error.\n"
    "Multimatrices are cubic (k values on every axis); an m x n 0/1 matrix is\n"
    "handled by padding it with zero rows or columns to a square.";

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{kDescription, "mmx"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  opts.jobs = default_jobs();
  app.add_option("--seed", opts.seed, "Random seed (u64)");
  app.add_option("--out", opts.out_dir, "Output directory for generated or persisted instances");
  app.add_option("--guard", opts.guard,
                 "Size guard: vertex limit for graph commands, cell limit for multimatrix solvers");
  app.add_option("--budget", opts.budget,
                 "Enumeration budget: det term limit, assign oracle limit, gap-scan instances");
  app.add_flag("--quiet", opts.quiet, "Omit certificate blocks from reports");
  app.add_option("--jobs", opts.jobs, "Worker threads for gap-scan and hunt")->check(CLI::PositiveNumber);

  std::vector<std::string> files;
  auto file_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("files", files, "Input files ('-' for stdin)")->required();
    return sub;
  };

  int r_value = 1;
  std::uint64_t cap = kDefaultMonomialCap;
  bool oracle = false;

  auto* det = file_command("det", "Multideterminant of an mm instance (n = 2: the determinant)");
  auto* mfind = file_command("monomial-find", "Least nonzero multideterminantal monomial");
  auto* mcount = file_command("monomial-count", "Count nonzero monomials");
  mcount->add_option("--cap", cap, "Stop counting at this value");
  auto* hall = file_command("hall-check", "Pairwise Hall condition of a pg friendship graph");
  auto* decompose = file_command("decompose", "Clique decomposition of a pg friendship graph");
  auto* t21 = file_command("check-t21", "Hall condition versus decomposability");
  auto* lcover = file_command("line-cover", "Minimum line cover");
  auto* lmatch = file_command("line-matching", "Maximum line-independent set of 1s");
  auto* rcover = file_command("rplane-cover", "Minimum r-plane cover");
  rcover->add_option("--r", r_value, "Plane dimension")->required();
  auto* rmatch = file_command("rplane-matching", "Maximum r-plane-independent set of 1s");
  rmatch->add_option("--r", r_value, "Plane dimension")->required();
  auto* gap = file_command("gap", "Cover versus matching duality gap");
  gap->add_option("--r", r_value, "Plane dimension (default 1: lines)");
  auto* assign = file_command("assign", "Axial multidimensional assignment on a cmm instance");
  assign->add_flag("--oracle", oracle, "Use full enumeration instead of branch and bound");
  auto* cover_match = file_command("cover-match", "Minimum vertex cover and maximum matching");
  auto* menger = file_command("menger", "All-pairs separator and disjoint path system");
  auto* t43 = file_command("check-t43", "Vertex cover versus matching verdict");
  auto* t51 = file_command("check-t51", "Separator versus disjoint paths verdict");

  ScanOptions scan;
  auto* scan_cmd = app.add_subcommand("gap-scan", "Gap histogram over many instances");
  scan_cmd->add_option("--n", scan.n);
  scan_cmd->add_option("--k", scan.k);
  scan_cmd->add_option("--r", scan.r);
  scan_cmd->add_option("--mode", scan.mode)->check(CLI::IsMember({"exhaustive", "random"}));
  scan_cmd->add_option("--count", scan.count, "Instances in random mode");
  scan_cmd->add_option("--density", scan.density, "Probability of a 1 in random mode");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded random instance");
  gen_cmd->add_option("kind", gen.kind, "multimatrix | costmatrix | graph")
      ->required()
      ->check(CLI::IsMember({"multimatrix", "costmatrix", "graph"}));
  gen_cmd->add_option("--n", gen.n);
  gen_cmd->add_option("--k", gen.k);
  gen_cmd->add_option("--density", gen.density, "Probability of a 1 or of an inter-part edge");
  gen_cmd->add_option("--min", gen.min_cost, "Least cost");
  gen_cmd->add_option("--max", gen.max_cost, "Largest cost");
  gen_cmd->add_option("--parts", gen.parts);
  gen_cmd->add_option("--part-size", gen.part_size);
  gen_cmd->add_option("--sizes", gen.sizes, "Comma-separated part sizes, overrides --parts");
  gen_cmd->add_option("--intra-density", gen.intra_density, "Probability of an edge inside a part");

  HuntOptions hunt_opts;
  auto* hunt_cmd = app.add_subcommand("hunt", "Search random instances for counterexamples");
  hunt_cmd->add_option("--claim", hunt_opts.claim)
      ->check(CLI::IsMember({"t21", "t41", "t42", "t43", "t51"}));
  hunt_cmd->add_option("--n", hunt_opts.n, "Axes, or number of parts for graph claims");
  hunt_cmd->add_option("--k", hunt_opts.k, "Extent, or part size for graph claims");
  hunt_cmd->add_option("--r", hunt_opts.r);
  hunt_cmd->add_option("--sizes", hunt_opts.sizes, "Comma-separated part sizes");
  hunt_cmd->add_option("--density", hunt_opts.density);
  hunt_cmd->add_option("--intra-density", hunt_opts.intra_density);
  hunt_cmd->add_option("--count", hunt_opts.count);
  hunt_cmd->add_flag("--shrink", hunt_opts.shrink, "Shrink each finding to a local minimum");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  Runner runner(opts, out);
  try {
    if (det->parsed()) {
      return runner.each_file("det", files, [&](const std::string& text, Report& r) {
        const auto m = load_binary(text, r);
        const auto terms = monomial_total(m.shape());
        r.set("terms", terms ? std::to_string(*terms) : std::string("overflow"));
        r.set("value", static_cast<long long>(multideterminant(m, runner.budget(kDefaultTermLimit))));
        return false;
      });
    }
    if (mfind->parsed()) {
      return runner.each_file("monomial-find", files, [&](const std::string& text, Report& r) {
        const auto m = load_binary(text, r);
        const auto t = find_nonzero_monomial(m);
        r.set("found", t.has_value());
        if (t) {
          r.set("tuple", format_tuple(*t));
          r.set("sign", tuple_sign(*t));
          r.block("support", coord_lines(support_of(m.shape(), *t)));
        }
        return false;
      });
    }
    if (mcount->parsed()) {
      return runner.each_file("monomial-count", files, [&](const std::string& text, Report& r) {
        const auto m = load_binary(text, r);
        const auto c = count_nonzero_monomials(m, cap);
        r.set("cap", static_cast<unsigned long long>(cap));
        r.set("count", (c.capped ? ">=" : "") + std::to_string(c.count));
        return false;
      });
    }
    if (hall->parsed()) {
      return runner.each_file("hall-check", files, [&](const std::string& text, Report& r) {
        const auto g = load_graph(text, r);
        const auto h = hall_condition(g);
        r.set("hall", h.holds);
        add_violation(r, h.violation);
        return false;
      });
    }
    if (decompose->parsed()) {
      return runner.each_file("decompose", files, [&](const std::string& text, Report& r) {
        const auto g = load_graph(text, r);
        const auto d = clique_decomposition(g);
        r.set("decomposable", d.has_value());
        if (d) {
          r.set("verified", verify_decomposition(g, *d));
          r.block("friendship_sets", decomposition_lines(*d));
        }
        return false;
      });
    }
    if (t21->parsed()) {
      return runner.each_file("check-t21", files, [&](const std::string& text, Report& r) {
        const auto g = load_graph(text, r);
        const auto rep = check_friendship_theorem(g);
        r.set("hall", rep.hall);
        r.set("decomposable", rep.decomposable);
        r.set("verdict", to_string(rep.verdict));
        add_violation(r, rep.violation);
        if (rep.decomposition) r.block("friendship_sets", decomposition_lines(*rep.decomposition));
        return rep.verdict != FriendshipVerdict::kConsistent;
      });
    }
    if (lcover->parsed() || rcover->parsed()) {
      const int r = lcover->parsed() ? 1 : r_value;
      return runner.each_file(lcover->parsed() ? "line-cover" : "rplane-cover", files,
                              [&](const std::string& text, Report& rep) {
                                const auto m = load_binary(text, rep);
                                const auto c = min_rplane_cover(m, r, runner.cell_budget(kDefaultCellBudget));
                                rep.set("r", r);
                                rep.set("alpha", c.size());
                                rep.block("cover", plane_lines(c));
                                return false;
                              });
    }
    if (lmatch->parsed() || rmatch->parsed()) {
      const int r = lmatch->parsed() ? 1 : r_value;
      return runner.each_file(lmatch->parsed() ? "line-matching" : "rplane-matching", files,
                              [&](const std::string& text, Report& rep) {
                                const auto m = load_binary(text, rep);
                                const auto c = max_rplane_matching(m, r, runner.cell_budget(kDefaultCellBudget));
                                rep.set("r", r);
                                rep.set("beta", c.size());
                                rep.block("matching", coord_lines(c.cells));
                                return false;
                              });
    }
    if (gap->parsed()) {
      return runner.each_file("gap", files, [&](const std::string& text, Report& r) {
        const auto m = load_binary(text, r);
        const auto g = duality_gap(m, r_value, runner.cell_budget(kDefaultCellBudget));
        add_gap_fields(r, g);
        return g.gap > 0;
      });
    }
    if (assign->parsed()) {
      return runner.each_file("assign", files, [&](const std::string& text, Report& r) {
        const auto c = parse_cost(text);
        r.set("instance", digest_of(serialize(c)));
        describe_shape(r, c.shape());
        r.set("interpretation", kAxialInterpretation);
        const auto reduction = reduction_bound(c);
        r.set("reduction_bound", format_rational(reduction.lower_bound));
        if (oracle) {
          const auto a = brute_force_assign(c, runner.budget(kDefaultEnumerationBudget));
          r.set("method", "enumeration");
          r.set("optimum", format_rational(a.cost));
          r.set("tuple", format_tuple(a.tuple));
          r.block("support", coord_lines(support_of(c.shape(), a.tuple)));
        } else {
          const auto s = solve_axial_map(c, runner.cell_budget(kDefaultAssignCellBudget));
          r.set("method", "branch-and-bound");
          r.set("optimum", format_rational(s.assignment.cost));
          r.set("tuple", format_tuple(s.assignment.tuple));
          r.set("nodes", static_cast<unsigned long long>(s.stats.nodes));
          r.set("pruned", static_cast<unsigned long long>(s.stats.pruned));
          r.set("leaves", static_cast<unsigned long long>(s.stats.leaves));
          r.set("root_bound", format_rational(s.stats.root_bound));
          r.block("support", coord_lines(support_of(c.shape(), s.assignment.tuple)));
        }
        return false;
      });
    }
    if (cover_match->parsed()) {
      return runner.each_file("cover-match", files, [&](const std::string& text, Report& r) {
        const auto g = load_graph(text, r);
        const auto c = min_vertex_cover_multipartite(g, runner.vertex_guard());
        const auto m = max_matching_multipartite(g, runner.vertex_guard());
        r.set("cover", c.size());
        r.set("matching", m.size());
        r.block("vertex_cover", {join_vertices(c.vertices)});
        r.block("matching_edges", edge_lines(m.edges));
        return false;
      });
    }
    if (menger->parsed()) {
      return runner.each_file("menger", files, [&](const std::string& text, Report& r) {
        const auto g = load_graph(text, r);
        const auto s = min_all_pairs_separator(g, runner.vertex_guard());
        const auto p = max_disjoint_path_system(g, runner.vertex_guard());
        r.set("separator", s.size());
        r.set("paths", p.size());
        r.block("separator_vertices", {join_vertices(s.vertices)});
        r.block("path_system", path_lines(p));
        return false;
      });
    }
    if (t43->parsed()) {
      return runner.each_file("check-t43", files, [&](const std::string& text, Report& r) {
        const auto g = load_graph(text, r);
        const auto rep = check_cover_matching(g, runner.vertex_guard());
        r.set("cover", rep.cover.size());
        r.set("matching", rep.matching.size());
        r.set("gap", rep.gap);
        r.set("verdict", to_string(rep.verdict));
        r.block("vertex_cover", {join_vertices(rep.cover.vertices)});
        r.block("matching_edges", edge_lines(rep.matching.edges));
        return rep.verdict == MinimaxVerdict::kGap;
      });
    }
    if (t51->parsed()) {
      return runner.each_file("check-t51", files, [&](const std::string& text, Report& r) {
        const auto g = load_graph(text, r);
        const auto rep = check_separator_paths(g, runner.vertex_guard());
        r.set("separator", rep.separator.size());
        r.set("paths", rep.paths.size());
        r.set("gap", rep.gap);
        r.set("verdict", to_string(rep.verdict));
        r.block("separator_vertices", {join_vertices(rep.separator.vertices)});
        r.block("path_system", path_lines(rep.paths));
        return rep.verdict == MinimaxVerdict::kGap;
      });
    }
    if (scan_cmd->parsed()) {
      const auto start = std::chrono::steady_clock::now();
      ScanConfig config;
      config.shape = Shape(scan.n, scan.k);
      config.r = scan.r;
      config.mode = scan.mode == "random" ? ScanMode::kRandom : ScanMode::kExhaustive;
      config.count = scan.count;
      config.seed = opts.seed;
      config.density = scan.density;
      config.scan_budget = runner.budget(kDefaultScanBudget);
      config.cell_budget = runner.cell_budget(kDefaultCellBudget);
      config.jobs = opts.jobs;
      if (!opts.out_dir.empty()) config.out_dir = opts.out_dir;
      const auto result = mmx::gap_scan(config);
      Report r("gap-scan");
      describe_shape(r, config.shape);
      r.set("r", config.r);
      r.set("mode", scan.mode);
      if (config.mode == ScanMode::kRandom) {
        r.set("density", std::to_string(config.density));
        r.set("seed", static_cast<unsigned long long>(config.seed));
      }
      r.set("instances", static_cast<unsigned long long>(result.instances));
      r.set("findings", static_cast<unsigned long long>(result.findings.size()));
      std::vector<std::string> hist;
      for (const auto& [g, count] : result.histogram) {
        hist.push_back("gap=" + std::to_string(g) + " count=" + std::to_string(count));
      }
      r.block("histogram", hist);
      std::vector<std::string> lines;
      for (const auto& f : result.findings) {
        std::string line = "index=" + std::to_string(f.index) + " alpha=" + std::to_string(f.alpha) +
                           " beta=" + std::to_string(f.beta) + " instance=" +
                           digest_of(serialize(f.instance));
        if (!f.file.empty()) line += " file=" + f.file;
        lines.push_back(line);
      }
      r.block("findings", lines);
      runner.emit(r, start);
      return result.findings.empty() ? kExitOk : kExitFinding;
    }
    if (gen_cmd->parsed()) {
      const auto start = std::chrono::steady_clock::now();
      Rng rng(opts.seed);
      std::string text;
      std::string ext;
      if (gen.kind == "multimatrix") {
        text = serialize(random_multimatrix(Shape(gen.n, gen.k), gen.density, rng));
        ext = "mm";
      } else if (gen.kind == "costmatrix") {
        text = serialize(random_cost_multimatrix(Shape(gen.n, gen.k), gen.min_cost, gen.max_cost, rng));
        ext = "cmm";
      } else {
        std::vector<int> sizes = gen.sizes.empty()
                                     ? std::vector<int>(static_cast<std::size_t>(std::max(0, gen.parts)), gen.part_size)
                                     : parse_sizes(gen.sizes);
        text = serialize(random_partitioned_graph(sizes, gen.density, gen.intra_density, rng));
        ext = "pg";
      }
      if (opts.out_dir.empty()) {
        out << text;
        return kExitOk;
      }
      const std::string digest = sha256_hex(text);
      std::filesystem::create_directories(opts.out_dir);
      const auto path = std::filesystem::path(opts.out_dir) /
                        (gen.kind + "-" + digest.substr(0, 16) + "." + ext);
      std::ofstream file(path, std::ios::binary);
      file << text;
      if (!file) throw InputError("cannot write " + path.string());
      Report r("gen");
      r.set("kind", gen.kind);
      r.set("seed", static_cast<unsigned long long>(opts.seed));
      r.set("instance", "sha256:" + digest);
      r.set("file", path.string());
      runner.emit(r, start);
      return kExitOk;
    }
    if (hunt_cmd->parsed()) {
      const auto start = std::chrono::steady_clock::now();
      HuntConfig config;
      config.claim = parse_claim(hunt_opts.claim);
      config.n = hunt_opts.n;
      config.k = hunt_opts.k;
      config.r = hunt_opts.r;
      if (!hunt_opts.sizes.empty()) config.part_sizes = parse_sizes(hunt_opts.sizes);
      config.density = hunt_opts.density;
      config.intra_density = hunt_opts.intra_density;
      config.count = hunt_opts.count;
      config.seed = opts.seed;
      config.shrink = hunt_opts.shrink;
      config.jobs = opts.jobs;
      config.cell_budget = runner.cell_budget(kDefaultCellBudget);
      config.guard = runner.vertex_guard();
      if (!opts.out_dir.empty()) config.out_dir = opts.out_dir;
      const auto summary = hunt(config);
      Report r("hunt");
      r.set("claim", to_string(config.claim));
      r.set("n", config.n);
      r.set("k", config.k);
      if (config.claim == Claim::kT42) r.set("r", config.r);
      if (!config.part_sizes.empty()) r.set("sizes", join_ints(config.part_sizes, ','));
      r.set("density", std::to_string(config.density));
      r.set("seed", static_cast<unsigned long long>(config.seed));
      r.set("shrink", config.shrink);
      r.set("instances", static_cast<unsigned long long>(summary.instances));
      r.set("findings", static_cast<unsigned long long>(summary.findings.size()));
      if (!summary.findings.empty()) {
        r.set("first_finding", static_cast<unsigned long long>(summary.findings.front().index));
      }
      std::vector<std::string> lines;
      for (const auto& f : summary.findings) {
        std::string line = "index=" + std::to_string(f.index) + " verdict=" + f.verdict +
                           " instance=" + digest_of(f.instance);
        if (config.shrink) line += " shrunk=" + digest_of(f.shrunk);
        if (!f.file.empty()) line += " file=" + f.file;
        if (!f.shrunk_file.empty()) line += " shrunk_file=" + f.shrunk_file;
        lines.push_back(line);
      }
      r.block("findings", lines);
      runner.emit(r, start);
      return summary.findings.empty() ? kExitOk : kExitFinding;
    }
  } catch (const FeasibilityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace mmx::cli
