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

#ifndef SUBLAT_PAIR_CLASS_HPP_
#define SUBLAT_PAIR_CLASS_HPP_

#include <string>

#include "sublat/space.hpp"

namespace sublat {

// The image of a subspace under f -> (f(x), f(y)): a subspace of R^2 in
// canonical form, tagged with the ordered point pair that produced it.
struct PairProjection {
  std::string x;
  std::string y;
  Basis proj_basis;  // ambient dimension 2
};

enum class PairKind { kZero, kFull, kLineAligned, kLineMixed };

// Classification of a 2-D projection against the catalog of closed linear
// sublattices of R^2: the zero space, the plane, lines with both direction
// coordinates of the same sign (sublattices) and lines with coordinates of
// opposite signs (not sublattices).
//
// Line normalization:
//   kLineAligned: 0 <= a, b and max(a, b) = 1
//   kLineMixed:   a < 0 < b and max(|a|, b) = 1
// (a, b) are zero for kZero / kFull.
struct PairClass {
  PairKind kind;
  Scalar a;
  Scalar b;

  bool operator==(const PairClass&) const = default;
};

// Projects A onto the coordinates of the two distinct points x and y.
PairProjection project_pair(const Subspace& a, std::string_view x, std::string_view y);

PairClass classify_pair(const PairProjection& proj);

// The plane has exactly five subalgebras under coordinate-wise operations:
// zero, the plane itself, the two axes and the diagonal. True iff the class
// is one of them.
bool is_algebra_class(const PairClass& cls);

std::string to_string(const PairClass& cls);

}  // namespace sublat

#endif  // SUBLAT_PAIR_CLASS_HPP_
