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
#include <cstdint>
#include <optional>
#include <vector>

#include "mmx/multimatrix.hpp"
#include "mmx/shape.hpp"

namespace mmx {

// A bijection of {1..k}; position j maps to image()[j-1].
class Permutation {
 public:
  // Throws InputError unless `image` is a permutation of 1..image.size().
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int k);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  int operator()(int j) const { return image_[static_cast<std::size_t>(j - 1)]; }
  const std::vector<int>& image() const noexcept { return image_; }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

// +1 for even permutations, -1 for odd ones.
int signature(const Permutation& p);

// (p o q)(j) = p(q(j)).
Permutation compose(const Permutation& p, const Permutation& q);

// The n-1 permutations that pick one multideterminantal monomial. Axis 1 is
// the running index j; axis d+1 takes the value perms[d-1](j).
struct PermutationTuple {
  std::vector<Permutation> perms;

  static PermutationTuple identity(const Shape& shape);
  friend auto operator<=>(const PermutationTuple&, const PermutationTuple&) = default;
};

std::string format_tuple(const PermutationTuple& t);

// Product of the signatures of the component permutations.
int tuple_sign(const PermutationTuple& t);

// The k cells {(j, l1(j), ..., l_{n-1}(j))}, ordered by j.
// Throws InputError when the tuple does not fit the shape.
std::vector<Coord> support_of(const Shape& shape, const PermutationTuple& t);

struct Monomial {
  PermutationTuple tuple;
  int sign = 1;
  int value = 0;
};

Monomial monomial_of(const BinaryMultimatrix& m, const PermutationTuple& t);

// Walks every tuple of a shape in lexicographic order (first permutation
// most significant, each permutation compared by its image). Single consumer.
class TupleEnumerator {
 public:
  explicit TupleEnumerator(const Shape& shape);

  const PermutationTuple& current() const noexcept { return current_; }
  // Advances; returns false after the last tuple.
  bool next();

 private:
  PermutationTuple current_;
};

// (k!)^(n-1), or nullopt when it exceeds 2^63.
std::optional<std::uint64_t> monomial_total(const Shape& shape);

inline constexpr std::uint64_t kDefaultTermLimit = 10'000'000;

// Exact signed sum over all (k!)^(n-1) monomials. Throws FeasibilityError
// naming the required term count when it exceeds `term_limit`.
std::int64_t multideterminant(const BinaryMultimatrix& m,
                              std::uint64_t term_limit = kDefaultTermLimit);

// Lexicographically least tuple whose support lies on 1-cells, if any.
// Complete backtracking with forward checking; never truncated.
std::optional<PermutationTuple> find_nonzero_monomial(const BinaryMultimatrix& m);

struct MonomialCount {
  std::uint64_t count = 0;
  // True when enumeration stopped at the cap; `count` then equals the cap.
  bool capped = false;
};

MonomialCount count_nonzero_monomials(const BinaryMultimatrix& m, std::uint64_t cap);

}  // namespace mmx
