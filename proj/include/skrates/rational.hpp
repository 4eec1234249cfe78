// Copyright 2026 The skrates Authors.
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

#ifndef SKRATES_RATIONAL_HPP_
#define SKRATES_RATIONAL_HPP_

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "skrates/error.hpp"

namespace skrates {

// All quantities (entropies, rates, LP data) are exact rationals in bits.
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" with decimal digits. The result is canonical.
inline Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
  };
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(num) || !digits(den)) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  if (den.find_first_not_of('0') == std::string_view::npos) {
    throw InputError("zero denominator in '" + std::string(text) + "'");
  }
  Rational value(std::string(text), 10);
  value.canonicalize();
  return value;
}

// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string format_rational(const Rational& value) { return value.get_str(); }

// num / den in lowest terms. mpq_class(num, den) alone does not reduce, and
// comparisons assume canonical operands.
inline Rational make_rational(long num, long den) {
  if (den == 0) throw InputError("zero denominator");
  Rational value(num, den);
  value.canonicalize();
  return value;
}

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }

inline Rational min_rational(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max_rational(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace skrates

#endif  // SKRATES_RATIONAL_HPP_
