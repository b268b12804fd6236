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

#include <string>
#include <string_view>
#include <variant>

#include "mmx/multimatrix.hpp"

namespace mmx {

// Multimatrix text format.
//
//   mm <n> <k> sparse|dense      binary instance
//   cmm <n> <k> sparse|dense     cost instance
//
// Sparse records are `<c1> ... <cn> <v>` with 1-based coordinates; unlisted
// cells are 0 and repeated coordinates are rejected. Dense bodies hold
// exactly k^n values, lexicographic with the last coordinate fastest.
// Costs are integers, decimals or `p/q` rationals.

using AnyMultimatrix = std::variant<BinaryMultimatrix, CostMultimatrix>;

// Throws ParseError (with the 1-based line number) on malformed input.
AnyMultimatrix parse_multimatrix(std::string_view text);
BinaryMultimatrix parse_binary(std::string_view text);
CostMultimatrix parse_cost(std::string_view text);

// Canonical text. Sparse when fewer than half of the cells are nonzero,
// dense otherwise; dense bodies print one row of the last axis per line.
std::string serialize(const BinaryMultimatrix& m);
std::string serialize(const CostMultimatrix& m);

}  // namespace mmx
