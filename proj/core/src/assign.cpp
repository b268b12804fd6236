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

#include "mmx/assign.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "mmx/error.hpp"

namespace mmx {

Rational assignment_cost(const CostMultimatrix& c, const PermutationTuple& tuple) {
  Rational total = 0;
  for (const auto& cell : support_of(c.shape(), tuple)) total += c.at(cell);
  return total;
}

Assignment brute_force_assign(const CostMultimatrix& c, std::uint64_t budget) {
  const auto total = monomial_total(c.shape());
  if (!total || *total > budget) {
    throw FeasibilityError("brute force needs " +
                           (total ? std::to_string(*total) : std::string("more than 2^63")) +
                           " assignments, budget is " + std::to_string(budget));
  }
  TupleEnumerator it(c.shape());
  Assignment best{it.current(), assignment_cost(c, it.current())};
  while (it.next()) {
    Rational cost = assignment_cost(c, it.current());
    if (cost < best.cost) best = Assignment{it.current(), std::move(cost)};
  }
  return best;
}

namespace {

// Dense cubic block with extent m per axis; the same sequential slice
// reduction as reduction_bound, applied in place. Returns the bound.
Rational reduce_block(std::vector<Rational>& cells, int n, int m) {
  Rational bound = 0;
  if (m == 0) return bound;
  std::vector<std::size_t> stride(static_cast<std::size_t>(n));
  std::size_t s = 1;
  for (int a = n - 1; a >= 0; --a) {
    stride[static_cast<std::size_t>(a)] = s;
    s *= static_cast<std::size_t>(m);
  }
  const std::size_t total = cells.size();
  for (int axis = 0; axis < n; ++axis) {
    const std::size_t st = stride[static_cast<std::size_t>(axis)];
    for (int t = 0; t < m; ++t) {
      std::optional<Rational> lo;
      for (std::size_t i = 0; i < total; ++i) {
        if (static_cast<int>((i / st) % static_cast<std::size_t>(m)) != t) continue;
        if (!lo || cells[i] < *lo) lo = cells[i];
      }
      if (*lo == 0) continue;
      for (std::size_t i = 0; i < total; ++i) {
        if (static_cast<int>((i / st) % static_cast<std::size_t>(m)) == t) cells[i] -= *lo;
      }
      bound += *lo;
    }
  }
  return bound;
}

class AxialSolver {
 public:
  explicit AxialSolver(const CostMultimatrix& c)
      : cost_(c),
        n_(c.shape().n()),
        k_(c.shape().k()),
        rows_(static_cast<std::size_t>(k_), std::vector<int>(static_cast<std::size_t>(n_ - 1), 0)),
        used_(static_cast<std::size_t>(n_ - 1), std::vector<char>(static_cast<std::size_t>(k_), 0)) {}

  SolveResult run() {
    Rational root;
    descend(0, Rational(0), &root);
    SolveResult result;
    result.stats = stats_;
    result.stats.root_bound = std::move(root);
    result.assignment = Assignment{to_tuple(best_rows_), *best_cost_};
    return result;
  }

 private:
  // Values still free on each non-row axis, ascending.
  std::vector<std::vector<int>> free_values() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n_ - 1));
    for (int d = 0; d < n_ - 1; ++d) {
      for (int v = 0; v < k_; ++v) {
        if (!used_[static_cast<std::size_t>(d)][static_cast<std::size_t>(v)]) {
          out[static_cast<std::size_t>(d)].push_back(v);
        }
      }
    }
    return out;
  }

  const Rational& cost_at(int row, const std::vector<int>& values) const {
    std::size_t idx = static_cast<std::size_t>(row);
    for (int v : values) idx = idx * static_cast<std::size_t>(k_) + static_cast<std::size_t>(v);
    return cost_.at_index(idx);
  }

  // -1, 0, +1 comparing the first `rows` entries of the first permutation.
  int compare_prefix(int rows) const {
    for (int j = 0; j < rows; ++j) {
      const int a = rows_[static_cast<std::size_t>(j)][0];
      const int b = best_rows_[static_cast<std::size_t>(j)][0];
      if (a != b) return a < b ? -1 : 1;
    }
    return 0;
  }

  PermutationTuple to_tuple(const std::vector<std::vector<int>>& rows) const {
    PermutationTuple t;
    for (int d = 0; d < n_ - 1; ++d) {
      std::vector<int> img;
      for (int j = 0; j < k_; ++j) img.push_back(rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)] + 1);
      t.perms.emplace_back(std::move(img));
    }
    return t;
  }

  // Tuples compare first permutation first, each by image.
  bool tuple_less(const std::vector<std::vector<int>>& a,
                  const std::vector<std::vector<int>>& b) const {
    for (int d = 0; d < n_ - 1; ++d) {
      for (int j = 0; j < k_; ++j) {
        const int x = a[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)];
        const int y = b[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)];
        if (x != y) return x < y;
      }
    }
    return false;
  }

  void descend(int row, const Rational& acc, Rational* root_bound) {
    ++stats_.nodes;
    if (row == k_) {
      ++stats_.leaves;
      if (!best_cost_ || acc < *best_cost_ ||
          (acc == *best_cost_ && tuple_less(rows_, best_rows_))) {
        best_cost_ = acc;
        best_rows_ = rows_;
      }
      return;
    }
    const int m = k_ - row;
    const auto free = free_values();
    // Residual block: rows row..k-1 and the free values of every other axis.
    std::vector<Rational> block;
    std::vector<int> local(static_cast<std::size_t>(n_), 0);
    std::vector<int> values(static_cast<std::size_t>(n_ - 1));
    for (bool more = true; more;) {
      for (int d = 0; d < n_ - 1; ++d) {
        values[static_cast<std::size_t>(d)] =
            free[static_cast<std::size_t>(d)][static_cast<std::size_t>(local[static_cast<std::size_t>(d + 1)])];
      }
      block.push_back(cost_at(row + local[0], values));
      more = false;
      for (int a = n_ - 1; a >= 0; --a) {
        if (++local[static_cast<std::size_t>(a)] < m) {
          more = true;
          break;
        }
        local[static_cast<std::size_t>(a)] = 0;
      }
    }
    const Rational bound = acc + reduce_block(block, n_, m);
    if (root_bound) *root_bound = bound;
    if (best_cost_) {
      if (bound > *best_cost_ || (bound == *best_cost_ && compare_prefix(row) > 0)) {
        ++stats_.pruned;
        return;
      }
    }

    // Candidates in the current row: the first m^(n-1) block entries.
    const std::size_t per_row = block.size() / static_cast<std::size_t>(m);
    std::vector<std::size_t> order(per_row);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return block[a] < block[b]; });
    for (std::size_t cand : order) {
      std::size_t rest = cand;
      for (int d = n_ - 2; d >= 0; --d) {
        const auto pick = rest % static_cast<std::size_t>(m);
        rest /= static_cast<std::size_t>(m);
        values[static_cast<std::size_t>(d)] = free[static_cast<std::size_t>(d)][pick];
      }
      const Rational next = acc + cost_at(row, values);
      rows_[static_cast<std::size_t>(row)] = values;
      for (int d = 0; d < n_ - 1; ++d) {
        used_[static_cast<std::size_t>(d)][static_cast<std::size_t>(values[static_cast<std::size_t>(d)])] = 1;
      }
      descend(row + 1, next, nullptr);
      for (int d = 0; d < n_ - 1; ++d) {
        used_[static_cast<std::size_t>(d)][static_cast<std::size_t>(values[static_cast<std::size_t>(d)])] = 0;
      }
    }
  }

  const CostMultimatrix& cost_;
  int n_;
  int k_;
  std::vector<std::vector<int>> rows_;
  std::vector<std::vector<char>> used_;
  std::optional<Rational> best_cost_;
  std::vector<std::vector<int>> best_rows_;
  SolveStats stats_;
};

}  // namespace

Reduction reduction_bound(const CostMultimatrix& c) {
  std::vector<Rational> cells = c.cells();
  Rational bound = reduce_block(cells, c.shape().n(), c.shape().k());
  return Reduction{std::move(bound), CostMultimatrix(c.shape(), std::move(cells))};
}

SolveResult solve_axial_map(const CostMultimatrix& c, std::size_t cell_budget) {
  if (c.shape().cell_count() > cell_budget) {
    throw FeasibilityError("instance has " + std::to_string(c.shape().cell_count()) +
                           " cells, memory guard is " + std::to_string(cell_budget));
  }
  return AxialSolver(c).run();
}

}  // namespace mmx
