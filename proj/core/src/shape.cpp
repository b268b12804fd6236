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

#include "mmx/shape.hpp"

#include <algorithm>
#include <sstream>

#include "mmx/error.hpp"

namespace mmx {
namespace {

// Dense storage ceiling; larger shapes are rejected at construction.
constexpr std::uint64_t kMaxCells = std::uint64_t{1} << 28;

// Advances `digits` (each in 1..k) as an odometer, last position fastest.
bool next_tuple(std::vector<int>& digits, int k) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] < k) {
      ++digits[i];
      return true;
    }
    digits[i] = 1;
  }
  return false;
}

// Next r-subset of {1..n} in lexicographic order.
bool next_combination(std::vector<int>& combo, int n) {
  const int r = static_cast<int>(combo.size());
  for (int i = r - 1; i >= 0; --i) {
    if (combo[i] < n - r + i + 1) {
      ++combo[i];
      for (int j = i + 1; j < r; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

std::string format_coord(const Coord& c) { return "(" + join(c) + ")"; }

bool checked_power(std::uint64_t base, int exponent, std::uint64_t limit, std::uint64_t& out) {
  std::uint64_t acc = 1;
  for (int i = 0; i < exponent; ++i) {
    if (base != 0 && acc > limit / base) return false;
    acc *= base;
  }
  out = acc;
  return acc <= limit;
}

Shape::Shape(int n, int k) : n_(n), k_(k), cells_(0) {
  if (n < 2) throw InputError("shape needs n >= 2, got n = " + std::to_string(n));
  if (k < 1) throw InputError("shape needs k >= 1, got k = " + std::to_string(k));
  std::uint64_t cells = 0;
  if (!checked_power(static_cast<std::uint64_t>(k), n, kMaxCells, cells)) {
    throw InputError("shape " + std::to_string(k) + "^" + std::to_string(n) +
                     " exceeds the dense storage limit");
  }
  cells_ = static_cast<std::size_t>(cells);
}

bool Shape::contains(const Coord& c) const noexcept {
  if (static_cast<int>(c.size()) != n_) return false;
  return std::all_of(c.begin(), c.end(), [this](int v) { return v >= 1 && v <= k_; });
}

void Shape::check(const Coord& c) const {
  if (!contains(c)) {
    throw InputError("coordinate " + format_coord(c) + " is not valid for shape n=" +
                     std::to_string(n_) + " k=" + std::to_string(k_));
  }
}

std::size_t Shape::index_of(const Coord& c) const {
  std::size_t idx = 0;
  for (int v : c) idx = idx * static_cast<std::size_t>(k_) + static_cast<std::size_t>(v - 1);
  return idx;
}

Coord Shape::coord_at(std::size_t index) const {
  Coord c(static_cast<std::size_t>(n_));
  for (int i = n_ - 1; i >= 0; --i) {
    c[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::size_t>(k_)) + 1;
    index /= static_cast<std::size_t>(k_);
  }
  return c;
}

RPlaneId to_rplane(const LineId& line) { return RPlaneId{{line.axis}, line.fixed}; }

LineId to_line(const RPlaneId& plane) {
  if (plane.free_axes.size() != 1) throw InputError("plane is not a line: " + format_rplane(plane));
  return LineId{plane.free_axes.front(), plane.fixed};
}

std::string format_line(const LineId& line) {
  return "axis=" + std::to_string(line.axis) + " fixed=" + join(line.fixed);
}

std::string format_rplane(const RPlaneId& plane) {
  return "free=" + join(plane.free_axes) + " fixed=" + join(plane.fixed);
}

std::vector<LineId> lines_of(const Shape& shape) {
  std::vector<LineId> out;
  for (const auto& plane : rplanes_of(shape, 1)) out.push_back(to_line(plane));
  return out;
}

std::vector<RPlaneId> rplanes_of(const Shape& shape, int r) {
  if (r < 1 || r > shape.n()) {
    throw InputError("r must lie in 1.." + std::to_string(shape.n()) + ", got " + std::to_string(r));
  }
  std::vector<RPlaneId> out;
  std::vector<int> axes(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) axes[static_cast<std::size_t>(i)] = i + 1;
  do {
    std::vector<int> fixed(static_cast<std::size_t>(shape.n() - r), 1);
    do {
      out.push_back(RPlaneId{axes, fixed});
    } while (next_tuple(fixed, shape.k()));
  } while (next_combination(axes, shape.n()));
  return out;
}

void check_rplane(const Shape& shape, const RPlaneId& plane) {
  const int r = plane.r();
  bool ok = r >= 1 && r <= shape.n() && static_cast<int>(plane.fixed.size()) == shape.n() - r &&
            std::is_sorted(plane.free_axes.begin(), plane.free_axes.end()) &&
            std::adjacent_find(plane.free_axes.begin(), plane.free_axes.end()) ==
                plane.free_axes.end();
  for (int a : plane.free_axes) ok = ok && a >= 1 && a <= shape.n();
  for (int v : plane.fixed) ok = ok && v >= 1 && v <= shape.k();
  if (!ok) throw InputError("invalid plane " + format_rplane(plane));
}

void check_line(const Shape& shape, const LineId& line) { check_rplane(shape, to_rplane(line)); }

std::vector<Coord> cells_on_rplane(const Shape& shape, const RPlaneId& plane) {
  check_rplane(shape, plane);
  std::vector<Coord> out;
  std::vector<int> free_values(plane.free_axes.size(), 1);
  do {
    Coord c(static_cast<std::size_t>(shape.n()));
    std::size_t fi = 0;
    std::size_t xi = 0;
    for (int axis = 1; axis <= shape.n(); ++axis) {
      if (fi < plane.free_axes.size() && plane.free_axes[fi] == axis) {
        c[static_cast<std::size_t>(axis - 1)] = free_values[fi++];
      } else {
        c[static_cast<std::size_t>(axis - 1)] = plane.fixed[xi++];
      }
    }
    out.push_back(std::move(c));
  } while (next_tuple(free_values, shape.k()));
  return out;
}

std::vector<Coord> cells_on_line(const Shape& shape, const LineId& line) {
  return cells_on_rplane(shape, to_rplane(line));
}

bool rplane_contains(const RPlaneId& plane, const Coord& c) noexcept {
  std::size_t fi = 0;
  std::size_t xi = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int axis = static_cast<int>(i) + 1;
    if (fi < plane.free_axes.size() && plane.free_axes[fi] == axis) {
      ++fi;
    } else {
      if (xi >= plane.fixed.size() || plane.fixed[xi++] != c[i]) return false;
    }
  }
  return true;
}

bool line_contains(const LineId& line, const Coord& c) noexcept {
  return rplane_contains(to_rplane(line), c);
}

int agreement(const Coord& p, const Coord& q) noexcept {
  int same = 0;
  for (std::size_t i = 0; i < p.size() && i < q.size(); ++i) same += p[i] == q[i];
  return same;
}

bool same_line(const Shape& shape, const Coord& p, const Coord& q) {
  shape.check(p);
  shape.check(q);
  return agreement(p, q) == shape.n() - 1;
}

bool same_rplane(const Shape& shape, int r, const Coord& p, const Coord& q) {
  if (r < 1 || r > shape.n()) {
    throw InputError("r must lie in 1.." + std::to_string(shape.n()) + ", got " + std::to_string(r));
  }
  shape.check(p);
  shape.check(q);
  const int same = agreement(p, q);
  return same < shape.n() && same >= shape.n() - r;
}

}  // namespace mmx
