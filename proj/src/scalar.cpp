// Copyright 2026 The sublat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sublat/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace sublat {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw std::invalid_argument("exact fractions required: invalid rational literal '" +
                              std::string(text) + "'");
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  std::string_view num = rest;
  std::string_view den;
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    num = rest.substr(0, slash);
    den = rest.substr(slash + 1);
    if (!all_digits(den)) bad_literal(text);
  }
  if (!all_digits(num)) bad_literal(text);

  Int n{std::string(num)};
  if (negative) n = -n;
  if (den.empty()) return Scalar(n);
  const Int d{std::string(den)};
  if (d == 0) bad_literal(text);
  return Scalar(n, d);
}

std::string to_string(const Scalar& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

}  // namespace sublat
