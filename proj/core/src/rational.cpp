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

#include "mmx/rational.hpp"

#include <cctype>

#include "mmx/error.hpp"

namespace mmx {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

// cpp_int treats a leading 0 as an octal prefix, so strip leading zeros.
boost::multiprecision::cpp_int parse_integer(std::string_view s) {
  const auto first = s.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return boost::multiprecision::cpp_int(std::string(s.substr(first)));
}

}  // namespace

Rational parse_rational(std::string_view token) {
  const std::string original(token);
  bool negative = false;
  if (!token.empty() && (token.front() == '-' || token.front() == '+')) {
    negative = token.front() == '-';
    token.remove_prefix(1);
  }
  Rational value;
  if (auto slash = token.find('/'); slash != std::string_view::npos) {
    auto num = token.substr(0, slash);
    auto den = token.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw InputError("invalid rational '" + original + "'");
    }
    auto d = parse_integer(den);
    if (d == 0) throw InputError("zero denominator in '" + original + "'");
    value = Rational(parse_integer(num), d);
  } else if (auto dot = token.find('.'); dot != std::string_view::npos) {
    auto whole = token.substr(0, dot);
    auto frac = token.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw InputError("invalid decimal '" + original + "'");
    }
    boost::multiprecision::cpp_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    boost::multiprecision::cpp_int digits =
        parse_integer(std::string(whole.empty() ? "0" : whole) + std::string(frac));
    value = Rational(digits, scale);
  } else {
    if (!all_digits(token)) throw InputError("invalid number '" + original + "'");
    value = Rational(parse_integer(token));
  }
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace mmx
