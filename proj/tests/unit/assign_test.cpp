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

#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "mmx/assign.hpp"
#include "mmx/det.hpp"
#include "mmx/error.hpp"
#include "mmx/format.hpp"
#include "mmx/generate.hpp"
#include "mmx/random.hpp"

namespace mmx {
namespace {

PermutationTuple tuple_from_flat(int n, int k, const std::vector<int>& flat) {
  PermutationTuple t;
  for (int d = 0; d < n - 1; ++d) {
    std::vector<int> image;
    for (int j = 0; j < k; ++j) image.push_back(flat[static_cast<std::size_t>(d * k + j)] + 1);
    t.perms.emplace_back(image);
  }
  return t;
}

Rational oracle_cost(const CostMultimatrix& c, const std::vector<int>& flat) {
  const int n = c.shape().n();
  const int k = c.shape().k();
  Rational sum = 0;
  for (int j = 0; j < k; ++j) {
    Coord cell{j + 1};
    for (int d = 0; d < n - 1; ++d) cell.push_back(flat[static_cast<std::size_t>(d * k + j)] + 1);
    sum += c.at(cell);
  }
  return sum;
}

// Least cost, ties to the lexicographically least tuple.
std::pair<std::vector<int>, Rational> oracle_assign(const CostMultimatrix& c) {
  std::optional<std::pair<std::vector<int>, Rational>> best;
  for (const auto& flat : oracle::all_tuples(c.shape().n(), c.shape().k())) {
    const auto cost = oracle_cost(c, flat);
    if (!best || cost < best->second) best = {flat, cost};
  }
  return *best;
}

CostMultimatrix constant(const Shape& s, const Rational& v) {
  return CostMultimatrix(s, std::vector<Rational>(s.cell_count(), v));
}

TEST(Assign, SingleCell) {
  const auto c = parse_cost("cmm 3 1 dense\n7/2\n");
  EXPECT_EQ(brute_force_assign(c).cost, Rational(7, 2));
  EXPECT_EQ(solve_axial_map(c).assignment.cost, Rational(7, 2));
}

TEST(Assign, TwoByTwo) {
  const auto c = parse_cost("cmm 2 2 dense\n1 2\n2 1\n");
  const auto a = brute_force_assign(c);
  EXPECT_EQ(a.cost, Rational(2));
  EXPECT_EQ(a.tuple, PermutationTuple::identity(c.shape()));
  EXPECT_EQ(solve_axial_map(c).assignment.tuple, a.tuple);
}

TEST(Assign, IdentityDiagonalCostsZero) {
  const Shape s(3, 3);
  auto c = constant(s, 1);
  for (const auto& cell : support_of(s, PermutationTuple::identity(s))) c = c.with(cell, 0);
  const auto r = solve_axial_map(c);
  EXPECT_EQ(r.assignment.cost, Rational(0));
  EXPECT_EQ(r.assignment.tuple, PermutationTuple::identity(s));
}

TEST(Assign, AllEqualPicksLeastTuple) {
  const Shape s(3, 3);
  const auto c = constant(s, Rational(5, 3));
  const auto r = solve_axial_map(c);
  EXPECT_EQ(r.assignment.cost, Rational(5));
  EXPECT_EQ(r.assignment.tuple, PermutationTuple::identity(s));
  const auto red = reduction_bound(c);
  EXPECT_EQ(red.lower_bound, Rational(5));
  for (const auto& v : red.reduced.cells()) EXPECT_EQ(v, 0);
}

TEST(Assign, UniformShiftKeepsArgmin) {
  Rng rng(51);
  for (int trial = 0; trial < 30; ++trial) {
    const Shape s(3, 3);
    const auto c = random_cost_multimatrix(s, -5, 5, rng);
    const Rational delta(static_cast<long long>(rng.between(-7, 7)), 3);
    std::vector<Rational> shifted = c.cells();
    for (auto& v : shifted) v += delta;
    const CostMultimatrix d(s, shifted);
    const auto a = brute_force_assign(c);
    const auto b = brute_force_assign(d);
    EXPECT_EQ(a.tuple, b.tuple);
    EXPECT_EQ(b.cost, a.cost + 3 * delta);
  }
}

TEST(Assign, BruteForceMatchesOracle) {
  Rng rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.between(2, 4));
    const int k = n == 2 ? static_cast<int>(rng.between(1, 4)) : (n == 3 ? static_cast<int>(rng.between(1, 3)) : 2);
    const auto c = random_cost_multimatrix(Shape(n, k), 0, 4, rng);
    const auto [flat, cost] = oracle_assign(c);
    const auto a = brute_force_assign(c);
    EXPECT_EQ(a.cost, cost);
    EXPECT_EQ(a.tuple, tuple_from_flat(n, k, flat));
    EXPECT_EQ(assignment_cost(c, a.tuple), a.cost);
  }
}

TEST(Assign, BranchAndBoundMatchesOracleIncludingTies) {
  Rng rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng.between(2, 4));
    const int k = n == 2 ? static_cast<int>(rng.between(1, 6)) : (n == 3 ? static_cast<int>(rng.between(1, 3)) : 2);
    // narrow cost range forces many ties
    const auto c = random_cost_multimatrix(Shape(n, k), 0, trial % 2 ? 2 : 20, rng);
    const auto [flat, cost] = oracle_assign(c);
    const auto r = solve_axial_map(c);
    EXPECT_EQ(r.assignment.cost, cost) << serialize(c);
    EXPECT_EQ(r.assignment.tuple, tuple_from_flat(n, k, flat)) << serialize(c);
    EXPECT_LE(r.stats.root_bound, cost);
  }
}

TEST(Assign, ReductionAccountingIdentity) {
  Rng rng(54);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = static_cast<int>(rng.between(2, 3));
    const auto c = random_cost_multimatrix(Shape(n, 3), -9, 9, rng);
    const auto red = reduction_bound(c);
    for (const auto& v : red.reduced.cells()) EXPECT_GE(v, 0);
    for (const auto& flat : oracle::all_tuples(n, 3)) {
      EXPECT_EQ(oracle_cost(c, flat), red.lower_bound + oracle_cost(red.reduced, flat));
    }
  }
}

TEST(Assign, MatrixReductionIsRowThenColumn) {
  const auto c = parse_cost("cmm 2 3 dense\n4 1 3\n2 0 5\n3 2 2\n");
  const auto red = reduction_bound(c);
  // rows subtract 1,0,2; the columns of the result then subtract 1,0,0
  EXPECT_EQ(red.lower_bound, Rational(4));
  EXPECT_EQ(brute_force_assign(c).cost, Rational(5));
}

TEST(Assign, Budgets) {
  const auto c = CostMultimatrix(Shape(3, 4));
  EXPECT_THROW(brute_force_assign(c, 100), FeasibilityError);
  EXPECT_THROW(solve_axial_map(c, 10), FeasibilityError);
}

}  // namespace
}  // namespace mmx
