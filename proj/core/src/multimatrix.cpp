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

#include "mmx/multimatrix.hpp"

#include <algorithm>

#include "mmx/error.hpp"

namespace mmx {

BinaryMultimatrix::BinaryMultimatrix(Shape shape)
    : shape_(shape), cells_(shape.cell_count(), 0) {}

BinaryMultimatrix::BinaryMultimatrix(Shape shape, std::vector<std::uint8_t> cells)
    : shape_(shape), cells_(std::move(cells)) {
  if (cells_.size() != shape_.cell_count()) {
    throw InputError("expected " + std::to_string(shape_.cell_count()) + " cells, got " +
                     std::to_string(cells_.size()));
  }
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i] > 1) {
      throw InputError("non-binary value at " + format_coord(shape_.coord_at(i)));
    }
  }
}

std::size_t BinaryMultimatrix::count_ones() const noexcept {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
}

std::vector<Coord> BinaryMultimatrix::ones() const {
  std::vector<Coord> out;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i]) out.push_back(shape_.coord_at(i));
  }
  return out;
}

BinaryMultimatrix BinaryMultimatrix::with(const Coord& c, bool value) const {
  shape_.check(c);
  BinaryMultimatrix copy = *this;
  copy.cells_[shape_.index_of(c)] = value ? 1 : 0;
  return copy;
}

CostMultimatrix::CostMultimatrix(Shape shape) : shape_(shape), cells_(shape.cell_count()) {}

CostMultimatrix::CostMultimatrix(Shape shape, std::vector<Rational> cells)
    : shape_(shape), cells_(std::move(cells)) {
  if (cells_.size() != shape_.cell_count()) {
    throw InputError("expected " + std::to_string(shape_.cell_count()) + " costs, got " +
                     std::to_string(cells_.size()));
  }
}

CostMultimatrix CostMultimatrix::with(const Coord& c, Rational value) const {
  shape_.check(c);
  CostMultimatrix copy = *this;
  copy.cells_[shape_.index_of(c)] = std::move(value);
  return copy;
}

BinaryMultimatrix from_entries(const Shape& shape, const std::set<Coord>& ones) {
  std::vector<std::uint8_t> cells(shape.cell_count(), 0);
  for (const auto& c : ones) {
    shape.check(c);
    cells[shape.index_of(c)] = 1;
  }
  return BinaryMultimatrix(shape, std::move(cells));
}

}  // namespace mmx
