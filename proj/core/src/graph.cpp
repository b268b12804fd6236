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

#include "mmx/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "mmx/error.hpp"

namespace mmx {

PartitionedGraph::PartitionedGraph(int vertex_count, std::vector<std::vector<Vertex>> parts,
                                   std::vector<Edge> edges)
    : vertex_count_(vertex_count), parts_(std::move(parts)) {
  if (vertex_count_ < 0) throw InputError("negative vertex count");
  const auto size = static_cast<std::size_t>(vertex_count_) + 1;
  part_of_.assign(size, 0);
  for (std::size_t p = 0; p < parts_.size(); ++p) {
    for (Vertex v : parts_[p]) {
      if (v < 1 || v > vertex_count_) {
        throw InputError("vertex " + std::to_string(v) + " out of range in part " +
                         std::to_string(p + 1));
      }
      if (part_of_[static_cast<std::size_t>(v)]) {
        throw InputError("vertex " + std::to_string(v) + " appears in more than one part");
      }
      part_of_[static_cast<std::size_t>(v)] = static_cast<int>(p) + 1;
    }
  }
  for (Vertex v = 1; v <= vertex_count_; ++v) {
    if (!part_of_[static_cast<std::size_t>(v)]) {
      throw InputError("vertex " + std::to_string(v) + " belongs to no part");
    }
  }
  matrix_.assign(size * size, 0);
  adjacency_.assign(size, {});
  for (auto [u, v] : edges) {
    if (u < 1 || u > vertex_count_ || v < 1 || v > vertex_count_) {
      throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
    }
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    char& cell = matrix_[static_cast<std::size_t>(u) * size + static_cast<std::size_t>(v)];
    if (cell) {
      throw InputError("repeated edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    cell = 1;
    matrix_[static_cast<std::size_t>(v) * size + static_cast<std::size_t>(u)] = 1;
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto [u, v] : edges_) {
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool PartitionedGraph::adjacent(Vertex u, Vertex v) const {
  const auto size = static_cast<std::size_t>(vertex_count_) + 1;
  return matrix_[static_cast<std::size_t>(u) * size + static_cast<std::size_t>(v)] != 0;
}

bool PartitionedGraph::has_intra_part_edge() const noexcept {
  return std::any_of(edges_.begin(), edges_.end(),
                     [this](const Edge& e) { return part_of(e.first) == part_of(e.second); });
}

int PartitionedGraph::uniform_part_size() const noexcept {
  if (parts_.empty()) return -1;
  const auto size = parts_.front().size();
  for (const auto& p : parts_) {
    if (p.size() != size) return -1;
  }
  return static_cast<int>(size);
}

PartitionedGraph PartitionedGraph::with_edges(std::vector<Edge> edges) const {
  return PartitionedGraph(vertex_count_, parts_, std::move(edges));
}

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

int to_int(std::string_view s, std::size_t line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, "expected integer, got '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

PartitionedGraph parse_graph(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> lines;
  std::size_t line_no = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto tokens = split(text.substr(pos, end - pos));
    if (!tokens.empty()) lines.emplace_back(line_no, std::move(tokens));
    if (end == text.size()) break;
    pos = end + 1;
    ++line_no;
  }
  if (lines.empty()) throw ParseError(1, "empty input, expected 'pg' header");
  const auto& [hline, header] = lines.front();
  if (header.size() != 4 || header[0] != "pg") {
    throw ParseError(hline, "header must be 'pg <nparts> <nvertices> <nedges>'");
  }
  const int nparts = to_int(header[1], hline);
  const int nvertices = to_int(header[2], hline);
  const int nedges = to_int(header[3], hline);
  if (nparts < 0 || nvertices < 0 || nedges < 0) throw ParseError(hline, "negative count");

  std::vector<std::vector<Vertex>> parts(static_cast<std::size_t>(nparts));
  std::vector<char> part_seen(static_cast<std::size_t>(nparts), 0);
  std::vector<Edge> edges;
  std::size_t last_line = hline;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [line, tokens] = lines[i];
    last_line = line;
    if (tokens[0] == "part") {
      if (tokens.size() < 2) throw ParseError(line, "part record needs a part number");
      const int p = to_int(tokens[1], line);
      if (p < 1 || p > nparts) throw ParseError(line, "part number out of range");
      if (part_seen[static_cast<std::size_t>(p - 1)]) throw ParseError(line, "part listed twice");
      part_seen[static_cast<std::size_t>(p - 1)] = 1;
      for (std::size_t t = 2; t < tokens.size(); ++t) {
        const int v = to_int(tokens[t], line);
        if (v < 1 || v > nvertices) throw ParseError(line, "vertex id out of range");
        parts[static_cast<std::size_t>(p - 1)].push_back(v);
      }
    } else if (tokens[0] == "edge") {
      if (tokens.size() != 3) throw ParseError(line, "edge record needs exactly two vertices");
      const int u = to_int(tokens[1], line);
      const int v = to_int(tokens[2], line);
      if (u < 1 || u > nvertices || v < 1 || v > nvertices) {
        throw ParseError(line, "edge endpoint out of range");
      }
      if (u == v) throw ParseError(line, "loop edge");
      edges.emplace_back(std::min(u, v), std::max(u, v));
    } else {
      throw ParseError(line, "unknown record '" + std::string(tokens[0]) + "'");
    }
  }
  if (static_cast<int>(edges.size()) != nedges) {
    throw ParseError(last_line, "header announces " + std::to_string(nedges) + " edges, found " +
                                    std::to_string(edges.size()));
  }
  try {
    return PartitionedGraph(nvertices, std::move(parts), std::move(edges));
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(last_line, e.what());
  }
}

std::string serialize(const PartitionedGraph& g) {
  std::ostringstream out;
  out << "pg " << g.part_count() << ' ' << g.vertex_count() << ' ' << g.edges().size() << '\n';
  for (int p = 1; p <= g.part_count(); ++p) {
    out << "part " << p;
    for (Vertex v : g.part(p)) out << ' ' << v;
    out << '\n';
  }
  for (auto [u, v] : g.edges()) out << "edge " << u << ' ' << v << '\n';
  return out.str();
}

PartitionedGraph make_graph(const std::vector<int>& part_sizes, std::vector<Edge> edges) {
  std::vector<std::vector<Vertex>> parts;
  int next = 1;
  for (int size : part_sizes) {
    std::vector<Vertex> part;
    for (int i = 0; i < size; ++i) part.push_back(next++);
    parts.push_back(std::move(part));
  }
  return PartitionedGraph(next - 1, std::move(parts), std::move(edges));
}

}  // namespace mmx
