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

#include "mmx/format.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include "mmx/error.hpp"

namespace mmx {
namespace {

struct Token {
  std::string_view text;
  std::size_t line;
};

// Splits the text into whitespace-separated tokens grouped by source line.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line_no = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) tokens.push_back({line.substr(start, i - start), line_no});
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    if (end == text.size()) break;
    pos = end + 1;
    ++line_no;
  }
  return lines;
}

int parse_int(const Token& t, const char* what) {
  int value = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(t.line, std::string("expected integer ") + what + ", got '" +
                                 std::string(t.text) + "'");
  }
  return value;
}

struct Header {
  bool binary;
  bool dense;
  std::optional<Shape> shape;
  std::size_t line;
};

Header parse_header(const std::vector<std::vector<Token>>& lines) {
  if (lines.empty()) throw ParseError(1, "empty input, expected header");
  const auto& h = lines.front();
  const std::size_t line = h.front().line;
  if (h.size() != 4) throw ParseError(line, "header must be '<mm|cmm> <n> <k> <sparse|dense>'");
  Header out{};
  out.line = line;
  if (h[0].text == "mm") {
    out.binary = true;
  } else if (h[0].text == "cmm") {
    out.binary = false;
  } else {
    throw ParseError(line, "unknown magic '" + std::string(h[0].text) + "'");
  }
  const int n = parse_int(h[1], "n");
  const int k = parse_int(h[2], "k");
  if (h[3].text == "dense") {
    out.dense = true;
  } else if (h[3].text == "sparse") {
    out.dense = false;
  } else {
    throw ParseError(line, "unknown mode '" + std::string(h[3].text) + "'");
  }
  try {
    out.shape.emplace(n, k);
  } catch (const InputError& e) {
    throw ParseError(line, e.what());
  }
  return out;
}

std::uint8_t parse_bit(const Token& t) {
  if (t.text == "0") return 0;
  if (t.text == "1") return 1;
  throw ParseError(t.line, "non-binary value '" + std::string(t.text) + "'");
}

Rational parse_cost_token(const Token& t) {
  try {
    return parse_rational(t.text);
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(t.line, e.what());
  }
}

template <typename Value, typename ParseValue>
std::vector<Value> parse_body(const std::vector<std::vector<Token>>& lines, const Header& header,
                              ParseValue parse_value) {
  const Shape& shape = *header.shape;
  const std::size_t total = shape.cell_count();
  std::vector<Value> cells(total, Value{});
  if (header.dense) {
    std::size_t filled = 0;
    std::size_t last_line = header.line;
    for (std::size_t li = 1; li < lines.size(); ++li) {
      for (const auto& t : lines[li]) {
        if (filled == total) {
          throw ParseError(t.line, "too many values, expected " + std::to_string(total));
        }
        cells[filled++] = parse_value(t);
        last_line = t.line;
      }
    }
    if (filled != total) {
      throw ParseError(last_line, "expected " + std::to_string(total) + " values, got " +
                                      std::to_string(filled));
    }
    return cells;
  }
  std::vector<std::uint8_t> seen(total, 0);
  const auto width = static_cast<std::size_t>(shape.n()) + 1;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& rec = lines[li];
    const std::size_t line = rec.front().line;
    if (rec.size() != width) {
      throw ParseError(line, "expected " + std::to_string(width) + " tokens, got " +
                                 std::to_string(rec.size()));
    }
    Coord c(static_cast<std::size_t>(shape.n()));
    for (std::size_t i = 0; i + 1 < width; ++i) c[i] = parse_int(rec[i], "coordinate");
    if (!shape.contains(c)) throw ParseError(line, "coordinate " + format_coord(c) + " out of range");
    const std::size_t idx = shape.index_of(c);
    if (seen[idx]) throw ParseError(line, "duplicate coordinate " + format_coord(c));
    seen[idx] = 1;
    cells[idx] = parse_value(rec.back());
  }
  return cells;
}

BinaryMultimatrix build_binary(const std::vector<std::vector<Token>>& lines, const Header& h) {
  return BinaryMultimatrix(*h.shape, parse_body<std::uint8_t>(lines, h, parse_bit));
}

CostMultimatrix build_cost(const std::vector<std::vector<Token>>& lines, const Header& h) {
  return CostMultimatrix(*h.shape, parse_body<Rational>(lines, h, parse_cost_token));
}

template <typename Cells, typename Format>
std::string serialize_impl(const char* magic, const Shape& shape, const Cells& cells,
                           Format format_value) {
  std::size_t nonzero = 0;
  for (const auto& v : cells) nonzero += v != 0;
  const bool dense = 2 * nonzero >= cells.size();
  std::ostringstream out;
  out << magic << ' ' << shape.n() << ' ' << shape.k() << ' ' << (dense ? "dense" : "sparse")
      << '\n';
  if (dense) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << format_value(cells[i]);
      out << (((i + 1) % static_cast<std::size_t>(shape.k()) == 0) ? '\n' : ' ');
    }
  } else {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i] == 0) continue;
      for (int v : shape.coord_at(i)) out << v << ' ';
      out << format_value(cells[i]) << '\n';
    }
  }
  return out.str();
}

}  // namespace

AnyMultimatrix parse_multimatrix(std::string_view text) {
  const auto lines = tokenize(text);
  const Header h = parse_header(lines);
  if (h.binary) return build_binary(lines, h);
  return build_cost(lines, h);
}

BinaryMultimatrix parse_binary(std::string_view text) {
  const auto lines = tokenize(text);
  const Header h = parse_header(lines);
  if (!h.binary) throw ParseError(h.line, "expected a binary 'mm' instance");
  return build_binary(lines, h);
}

CostMultimatrix parse_cost(std::string_view text) {
  const auto lines = tokenize(text);
  const Header h = parse_header(lines);
  if (h.binary) throw ParseError(h.line, "expected a cost 'cmm' instance");
  return build_cost(lines, h);
}

std::string serialize(const BinaryMultimatrix& m) {
  return serialize_impl("mm", m.shape(), m.cells(),
                        [](std::uint8_t v) { return std::to_string(static_cast<int>(v)); });
}

std::string serialize(const CostMultimatrix& m) {
  return serialize_impl("cmm", m.shape(), m.cells(),
                        [](const Rational& v) { return format_rational(v); });
}

}  // namespace mmx
