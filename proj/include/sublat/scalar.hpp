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

#ifndef SUBLAT_SCALAR_HPP_
#define SUBLAT_SCALAR_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace sublat {

// All arithmetic in the decision path is exact. Scalar is an
// arbitrary-precision rational kept in lowest terms with a positive
// denominator; there is no floating point anywhere downstream.
using Int = boost::multiprecision::cpp_int;
using Scalar = boost::multiprecision::cpp_rational;

// Parses an exact rational literal: "p", "-p" or "p/q" where p, q are
// decimal digit strings (optional leading sign on p, q > 0). Decimal
// points and exponents are rejected; exact fractions are required.
// Throws std::invalid_argument on any other input.
Scalar parse_scalar(std::string_view text);

// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string to_string(const Scalar& value);

inline int sign(const Scalar& value) { return value.sign(); }
inline Scalar abs_val(const Scalar& value) { return boost::multiprecision::abs(value); }

}  // namespace sublat

#endif  // SUBLAT_SCALAR_HPP_
