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

#include "sublat/pair_class.hpp"

#include <stdexcept>

namespace sublat {

PairProjection project_pair(const Subspace& a, std::string_view x, std::string_view y) {
  if (x == y) throw std::invalid_argument("pair projection needs two distinct points");
  const std::size_t ix = a.space->index(x);
  const std::size_t iy = a.space->index(y);

  std::vector<std::vector<Scalar>> rows;
  rows.reserve(a.basis.rank());
  for (const auto& v : a.basis.vectors()) {
    rows.push_back({v[ix], v[iy]});
  }
  return PairProjection{std::string(x), std::string(y), span_of_rows(rows, 2)};
}

PairClass classify_pair(const PairProjection& proj) {
  switch (proj.proj_basis.rank()) {
    case 0:
      return PairClass{PairKind::kZero, Scalar(0), Scalar(0)};
    case 2:
      return PairClass{PairKind::kFull, Scalar(0), Scalar(0)};
    default:
      break;
  }

  // Rank 1: the canonical generator is (0,1) or (1,c).
  const auto& row = proj.proj_basis.vectors()[0];
  const Scalar& u = row[0];
  const Scalar& v = row[1];
  if (u == 0) return PairClass{PairKind::kLineAligned, Scalar(0), Scalar(1)};
  if (v == 0) return PairClass{PairKind::kLineAligned, Scalar(1), Scalar(0)};

  if (v > 0) {
    // Same-sign direction; scale so the larger coordinate becomes 1.
    if (v <= 1) return PairClass{PairKind::kLineAligned, Scalar(1), v};
    return PairClass{PairKind::kLineAligned, Scalar(1) / v, Scalar(1)};
  }

  // Opposite signs; orient as a < 0 < b with max(|a|, b) = 1.
  const Scalar m = -v;
  if (m <= 1) return PairClass{PairKind::kLineMixed, Scalar(-1), m};
  return PairClass{PairKind::kLineMixed, Scalar(-1) / m, Scalar(1)};
}

bool is_algebra_class(const PairClass& cls) {
  switch (cls.kind) {
    case PairKind::kZero:
    case PairKind::kFull:
      return true;
    case PairKind::kLineAligned:
      // Axes and the diagonal.
      return (cls.a == 0 && cls.b == 1) || (cls.a == 1 && cls.b == 0) ||
             (cls.a == 1 && cls.b == 1);
    case PairKind::kLineMixed:
      return false;
  }
  return false;
}

std::string to_string(const PairClass& cls) {
  switch (cls.kind) {
    case PairKind::kZero:
      return "zero";
    case PairKind::kFull:
      return "full";
    case PairKind::kLineAligned:
      return "aligned(" + to_string(cls.a) + "," + to_string(cls.b) + ")";
    case PairKind::kLineMixed:
      return "mixed(" + to_string(cls.a) + "," + to_string(cls.b) + ")";
  }
  return "?";
}

}  // namespace sublat
