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

#include <boost/multiprecision/cpp_int.hpp>

namespace mmx {

// Exact arbitrary-precision rational used for all cost arithmetic.
using Rational = boost::multiprecision::cpp_rational;

// Accepts integers ("-3"), fractions ("7/2") and plain decimals ("1.25").
// Throws InputError on anything else, including a zero denominator.
Rational parse_rational(std::string_view token);

// Canonical text: "p" when the denominator is 1, otherwise "p/q" in lowest terms.
std::string format_rational(const Rational& value);

}  // namespace mmx
