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
#include <set>
#include <vector>

#include "mmx/rational.hpp"
#include "mmx/shape.hpp"

namespace mmx {

// An n-dimensional 0/1 array of extent k per axis.
class BinaryMultimatrix {
 public:
  // All-zero instance.
  explicit BinaryMultimatrix(Shape shape);
  // `cells` is in dense order; every value must be 0 or 1.
  BinaryMultimatrix(Shape shape, std::vector<std::uint8_t> cells);

  const Shape& shape() const noexcept { return shape_; }
  const std::vector<std::uint8_t>& cells() const noexcept { return cells_; }

  bool at(const Coord& c) const { return cells_[shape_.index_of(c)] != 0; }
  bool at_index(std::size_t i) const { return cells_[i] != 0; }

  std::size_t count_ones() const noexcept;
  // Coordinates of the 1-cells in dense order.
  std::vector<Coord> ones() const;

  BinaryMultimatrix with(const Coord& c, bool value) const;

  friend bool operator==(const BinaryMultimatrix&, const BinaryMultimatrix&) = default;

 private:
  Shape shape_;
  std::vector<std::uint8_t> cells_;
};

// Same shape contract with exact rational costs.
class CostMultimatrix {
 public:
  explicit CostMultimatrix(Shape shape);
  CostMultimatrix(Shape shape, std::vector<Rational> cells);

  const Shape& shape() const noexcept { return shape_; }
  const std::vector<Rational>& cells() const noexcept { return cells_; }

  const Rational& at(const Coord& c) const { return cells_[shape_.index_of(c)]; }
  const Rational& at_index(std::size_t i) const { return cells_[i]; }

  CostMultimatrix with(const Coord& c, Rational value) const;

  friend bool operator==(const CostMultimatrix&, const CostMultimatrix&) = default;

 private:
  Shape shape_;
  std::vector<Rational> cells_;
};

// Sets exactly the listed coordinates to 1. Throws InputError naming the
// first coordinate that is out of range.
BinaryMultimatrix from_entries(const Shape& shape, const std::set<Coord>& ones);

}  // namespace mmx
