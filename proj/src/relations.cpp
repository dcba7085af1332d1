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

#include "sublat/relations.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace sublat {

std::string to_string(Mode mode) {
  return mode == Mode::kLattice ? "lattice" : "algebra";
}

Relation::Relation(std::string t_in, std::string s_in, Scalar lambda_in)
    : t(std::move(t_in)), s(std::move(s_in)), lambda(std::move(lambda_in)) {
  if (lambda < 0 || lambda > 1) {
    throw std::invalid_argument("relation coefficient must lie in [0,1], got " +
                                to_string(lambda));
  }
}

std::vector<Relation> canonicalize(const FiniteSpace& space, std::vector<Relation> relations) {
  std::vector<Relation> out;
  out.reserve(relations.size());
  for (auto& r : relations) {
    const std::size_t it = space.index(r.t);
    const std::size_t is = space.index(r.s);
    if (it == is) {
      if (r.lambda == 1) continue;  // f(t) = f(t), vacuous
      out.emplace_back(r.t, r.t, Scalar(0));
      continue;
    }
    if (r.lambda == 0) {
      // f(t) = 0 * f(s) pins f(t) = 0 regardless of s.
      out.emplace_back(r.t, r.t, Scalar(0));
      continue;
    }
    if (r.lambda == 1 && is < it) {
      out.emplace_back(r.s, r.t, Scalar(1));
      continue;
    }
    out.push_back(std::move(r));
  }

  auto key = [&space](const Relation& r) {
    return std::tuple<std::size_t, std::size_t, const Scalar&>(space.index(r.t),
                                                               space.index(r.s), r.lambda);
  };
  std::sort(out.begin(), out.end(),
            [&key](const Relation& a, const Relation& b) { return key(a) < key(b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RelationSystem::RelationSystem(SpacePtr space, std::vector<Relation> relations)
    : space_(std::move(space)) {
  if (!space_) throw std::invalid_argument("relation system needs a space");
  relations_ = canonicalize(*space_, std::move(relations));
}

RelationSystem RelationSystem::empty(SpacePtr space) {
  return RelationSystem(std::move(space), {});
}

RelationSystem extract_relations(const Subspace& a, Mode mode) {
  const FiniteSpace& space = *a.space;
  const std::size_t n = space.size();
  std::vector<Relation> found;

  // Points where every member vanishes. For two or more points the pair
  // sweep below re-derives these, but a one-point space has no pairs.
  for (std::size_t i = 0; i < n; ++i) {
    bool all_zero = true;
    for (const auto& row : a.basis.vectors()) {
      if (row[i] != 0) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) found.emplace_back(space.label(i), space.label(i), Scalar(0));
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::string& x = space.label(i);
      const std::string& y = space.label(j);
      const PairClass cls = classify_pair(project_pair(a, x, y));
      switch (cls.kind) {
        case PairKind::kZero:
          found.emplace_back(x, x, Scalar(0));
          found.emplace_back(y, y, Scalar(0));
          break;
        case PairKind::kFull:
        case PairKind::kLineMixed:
          break;
        case PairKind::kLineAligned:
          if (cls.a == 0) {
            found.emplace_back(x, x, Scalar(0));
          } else if (cls.b == 0) {
            found.emplace_back(y, y, Scalar(0));
          } else if (cls.a == 1 && cls.b == 1) {
            found.emplace_back(x, y, Scalar(1));
          } else if (cls.b == 1) {
            // f(x) = a * f(y) with 0 < a < 1; dropped in algebra mode.
            if (mode == Mode::kLattice) found.emplace_back(x, y, cls.a);
          } else {
            // f(y) = b * f(x) with 0 < b < 1.
            if (mode == Mode::kLattice) found.emplace_back(y, x, cls.b);
          }
          break;
      }
    }
  }
  return RelationSystem(a.space, std::move(found));
}

Subspace relation_space(SpacePtr space, std::span<const Relation> relations) {
  const std::size_t n = space->size();
  Matrix constraints = Matrix::zero(0, n);
  for (const Relation& r : relations) {
    std::vector<Scalar> row(n, Scalar(0));
    row[space->index(r.t)] += 1;
    row[space->index(r.s)] -= r.lambda;
    constraints.append_row(row);
  }
  return Subspace{space, kernel(constraints)};
}

Subspace relation_space(const RelationSystem& r) {
  return relation_space(r.space(), r.relations());
}

bool satisfies(const FunctionVec& f, const Relation& r) {
  return f.at(r.t) == r.lambda * f.at(r.s);
}

}  // namespace sublat
