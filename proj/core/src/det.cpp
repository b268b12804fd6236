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

#include "mmx/det.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "mmx/error.hpp"

namespace mmx {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size() + 1, 0);
  for (int v : image_) {
    if (v < 1 || v > static_cast<int>(image_.size()) || seen[static_cast<std::size_t>(v)]) {
      throw InputError("not a permutation of 1.." + std::to_string(image_.size()));
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> image(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) image[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(image));
}

int signature(const Permutation& p) {
  // Parity from the cycle decomposition: a cycle of length L contributes L-1 swaps.
  const auto& img = p.image();
  std::vector<char> visited(img.size(), 0);
  int swaps = 0;
  for (std::size_t start = 0; start < img.size(); ++start) {
    if (visited[start]) continue;
    std::size_t j = start;
    int length = 0;
    while (!visited[j]) {
      visited[j] = 1;
      j = static_cast<std::size_t>(img[j] - 1);
      ++length;
    }
    swaps += length - 1;
  }
  return swaps % 2 == 0 ? 1 : -1;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw InputError("cannot compose permutations of different sizes");
  std::vector<int> image(static_cast<std::size_t>(p.size()));
  for (int j = 1; j <= p.size(); ++j) image[static_cast<std::size_t>(j - 1)] = p(q(j));
  return Permutation(std::move(image));
}

PermutationTuple PermutationTuple::identity(const Shape& shape) {
  return PermutationTuple{
      std::vector<Permutation>(static_cast<std::size_t>(shape.n() - 1),
                               Permutation::identity(shape.k()))};
}

std::string format_tuple(const PermutationTuple& t) {
  std::string out;
  for (std::size_t i = 0; i < t.perms.size(); ++i) {
    if (i) out += ' ';
    out += '[';
    const auto& img = t.perms[i].image();
    for (std::size_t j = 0; j < img.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(img[j]);
    }
    out += ']';
  }
  return out;
}

int tuple_sign(const PermutationTuple& t) {
  int sign = 1;
  for (const auto& p : t.perms) sign *= signature(p);
  return sign;
}

std::vector<Coord> support_of(const Shape& shape, const PermutationTuple& t) {
  if (static_cast<int>(t.perms.size()) != shape.n() - 1) {
    throw InputError("tuple needs " + std::to_string(shape.n() - 1) + " permutations");
  }
  for (const auto& p : t.perms) {
    if (p.size() != shape.k()) throw InputError("permutation size does not match k");
  }
  std::vector<Coord> out;
  out.reserve(static_cast<std::size_t>(shape.k()));
  for (int j = 1; j <= shape.k(); ++j) {
    Coord c;
    c.reserve(static_cast<std::size_t>(shape.n()));
    c.push_back(j);
    for (const auto& p : t.perms) c.push_back(p(j));
    out.push_back(std::move(c));
  }
  return out;
}

Monomial monomial_of(const BinaryMultimatrix& m, const PermutationTuple& t) {
  int value = 1;
  for (const auto& c : support_of(m.shape(), t)) value &= m.at(c) ? 1 : 0;
  return Monomial{t, tuple_sign(t), value};
}

TupleEnumerator::TupleEnumerator(const Shape& shape) : current_(PermutationTuple::identity(shape)) {}

bool TupleEnumerator::next() {
  for (std::size_t i = current_.perms.size(); i-- > 0;) {
    std::vector<int> img = current_.perms[i].image();
    if (std::next_permutation(img.begin(), img.end())) {
      current_.perms[i] = Permutation(std::move(img));
      return true;
    }
    // next_permutation wrapped around to the identity; carry into i-1.
    current_.perms[i] = Permutation(std::move(img));
  }
  return false;
}

std::optional<std::uint64_t> monomial_total(const Shape& shape) {
  std::uint64_t factorial = 1;
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 63;
  for (int i = 2; i <= shape.k(); ++i) {
    if (factorial > kLimit / static_cast<std::uint64_t>(i)) return std::nullopt;
    factorial *= static_cast<std::uint64_t>(i);
  }
  std::uint64_t total = 0;
  if (!checked_power(factorial, shape.n() - 1, kLimit, total)) return std::nullopt;
  return total;
}

namespace {

// Depth-first search over the positions (perm p, row j) in tuple order:
// all rows of perm 0 first, then perm 1, and so on. Values are tried in
// ascending order, so leaves are reached in lexicographic tuple order.
// Forward checking prunes a branch as soon as some row has no 1-cell left
// that is consistent with the assigned values and the unused values.
class MonomialSearch {
 public:
  explicit MonomialSearch(const BinaryMultimatrix& m)
      : k_(m.shape().k()),
        perms_(m.shape().n() - 1),
        assigned_(static_cast<std::size_t>(perms_ * k_), 0),
        used_(static_cast<std::size_t>(perms_ * (k_ + 1)), 0),
        rows_(static_cast<std::size_t>(k_)) {
    for (const auto& c : m.ones()) {
      rows_[static_cast<std::size_t>(c[0] - 1)].emplace_back(c.begin() + 1, c.end());
    }
  }

  // Calls `leaf` for each nonzero monomial in lexicographic order until it returns false.
  void run(const std::function<bool(const std::vector<int>&)>& leaf) {
    leaf_ = &leaf;
    stop_ = false;
    if (consistent()) descend(0);
  }

  PermutationTuple tuple() const {
    PermutationTuple t;
    for (int p = 0; p < perms_; ++p) {
      std::vector<int> img(assigned_.begin() + p * k_, assigned_.begin() + (p + 1) * k_);
      t.perms.emplace_back(std::move(img));
    }
    return t;
  }

 private:
  int& slot(int p, int j) { return assigned_[static_cast<std::size_t>(p * k_ + j)]; }
  int slot(int p, int j) const { return assigned_[static_cast<std::size_t>(p * k_ + j)]; }
  char& used(int p, int v) { return used_[static_cast<std::size_t>(p * (k_ + 1) + v)]; }
  char used(int p, int v) const { return used_[static_cast<std::size_t>(p * (k_ + 1) + v)]; }

  bool consistent() const {
    for (int j = 0; j < k_; ++j) {
      bool any = false;
      for (const auto& cell : rows_[static_cast<std::size_t>(j)]) {
        bool ok = true;
        for (int p = 0; p < perms_ && ok; ++p) {
          const int fixed = slot(p, j);
          const int v = cell[static_cast<std::size_t>(p)];
          ok = fixed ? fixed == v : !used(p, v);
        }
        if (ok) {
          any = true;
          break;
        }
      }
      if (!any) return false;
    }
    return true;
  }

  void descend(int position) {
    if (stop_) return;
    if (position == perms_ * k_) {
      if (!(*leaf_)(assigned_)) stop_ = true;
      return;
    }
    const int p = position / k_;
    const int j = position % k_;
    for (int v = 1; v <= k_ && !stop_; ++v) {
      if (used(p, v)) continue;
      slot(p, j) = v;
      used(p, v) = 1;
      if (consistent()) descend(position + 1);
      used(p, v) = 0;
      slot(p, j) = 0;
    }
  }

  int k_;
  int perms_;
  std::vector<int> assigned_;
  std::vector<char> used_;
  std::vector<std::vector<std::vector<int>>> rows_;
  const std::function<bool(const std::vector<int>&)>* leaf_ = nullptr;
  bool stop_ = false;
};

int sign_of_assignment(const std::vector<int>& assigned, int perms, int k) {
  int sign = 1;
  for (int p = 0; p < perms; ++p) {
    std::vector<int> img(assigned.begin() + p * k, assigned.begin() + (p + 1) * k);
    sign *= signature(Permutation(std::move(img)));
  }
  return sign;
}

}  // namespace

std::int64_t multideterminant(const BinaryMultimatrix& m, std::uint64_t term_limit) {
  const auto total = monomial_total(m.shape());
  if (!total || *total > term_limit) {
    std::string required = "more than 2^63";
    if (total) required = std::to_string(*total);
    throw FeasibilityError("multideterminant needs " + required + " terms, limit is " +
                           std::to_string(term_limit));
  }
  // Zero monomials contribute nothing, so summing the signs of the nonzero
  // ones is the full expansion.
  std::int64_t sum = 0;
  const int perms = m.shape().n() - 1;
  const int k = m.shape().k();
  MonomialSearch search(m);
  std::function<bool(const std::vector<int>&)> leaf = [&](const std::vector<int>& a) {
    sum += sign_of_assignment(a, perms, k);
    return true;
  };
  search.run(leaf);
  return sum;
}

std::optional<PermutationTuple> find_nonzero_monomial(const BinaryMultimatrix& m) {
  MonomialSearch search(m);
  std::optional<PermutationTuple> found;
  std::function<bool(const std::vector<int>&)> leaf = [&](const std::vector<int>&) {
    found = search.tuple();
    return false;
  };
  search.run(leaf);
  return found;
}

MonomialCount count_nonzero_monomials(const BinaryMultimatrix& m, std::uint64_t cap) {
  MonomialCount result;
  if (cap == 0) {
    result.capped = true;
    return result;
  }
  MonomialSearch search(m);
  std::function<bool(const std::vector<int>&)> leaf = [&](const std::vector<int>&) {
    ++result.count;
    if (result.count >= cap) {
      result.capped = true;
      return false;
    }
    return true;
  };
  search.run(leaf);
  return result;
}

}  // namespace mmx
