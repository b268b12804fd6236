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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mmx {

// A cell coordinate. Components are 1-based, one per axis.
using Coord = std::vector<int>;

std::string format_coord(const Coord& c);

// Cubic extent: n axes, k index values per axis.
class Shape {
 public:
  // Throws InputError unless n >= 2, k >= 1 and k^n fits the addressable range.
  Shape(int n, int k);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::size_t cell_count() const noexcept { return cells_; }

  bool contains(const Coord& c) const noexcept;
  // Throws InputError naming the coordinate when it is not valid for this shape.
  void check(const Coord& c) const;

  // Dense order: lexicographic, last coordinate varies fastest.
  std::size_t index_of(const Coord& c) const;
  Coord coord_at(std::size_t index) const;

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  int n_;
  int k_;
  std::size_t cells_;
};

// k^e with overflow detection; returns false on overflow past `limit`.
bool checked_power(std::uint64_t base, int exponent, std::uint64_t limit, std::uint64_t& out);

// A coordinate line: `axis` varies, `fixed` holds the n-1 remaining values in axis order.
struct LineId {
  int axis = 1;
  std::vector<int> fixed;

  friend auto operator<=>(const LineId&, const LineId&) = default;
};

// A coordinate r-plane: the axes in `free_axes` (ascending) vary, the rest
// are pinned to `fixed` in axis order.
struct RPlaneId {
  std::vector<int> free_axes;
  std::vector<int> fixed;

  int r() const noexcept { return static_cast<int>(free_axes.size()); }
  friend auto operator<=>(const RPlaneId&, const RPlaneId&) = default;
};

RPlaneId to_rplane(const LineId& line);
// Throws InputError unless the plane has exactly one free axis.
LineId to_line(const RPlaneId& plane);

std::string format_line(const LineId& line);
std::string format_rplane(const RPlaneId& plane);

// All n*k^(n-1) lines: ascending axis, then lexicographic fixed indices.
std::vector<LineId> lines_of(const Shape& shape);

// All C(n,r)*k^(n-r) r-planes: free-axis sets in lexicographic order, then
// lexicographic fixed indices. For r = 1 the order matches lines_of.
std::vector<RPlaneId> rplanes_of(const Shape& shape, int r);

void check_line(const Shape& shape, const LineId& line);
void check_rplane(const Shape& shape, const RPlaneId& plane);

// The k cells of a line, ascending along the free axis.
std::vector<Coord> cells_on_line(const Shape& shape, const LineId& line);
// The k^r cells of an r-plane in dense order.
std::vector<Coord> cells_on_rplane(const Shape& shape, const RPlaneId& plane);

bool line_contains(const LineId& line, const Coord& c) noexcept;
bool rplane_contains(const RPlaneId& plane, const Coord& c) noexcept;

// Number of positions where p and q agree. Both must have the same length.
int agreement(const Coord& p, const Coord& q) noexcept;

// True iff p != q and they agree in exactly n-1 positions.
bool same_line(const Shape& shape, const Coord& p, const Coord& q);

// True iff p != q and they agree in at least n-r positions.
// Throws InputError unless 1 <= r <= n.
bool same_rplane(const Shape& shape, int r, const Coord& p, const Coord& q);

}  // namespace mmx
