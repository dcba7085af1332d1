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

#ifndef SUBLAT_RELATIONS_HPP_
#define SUBLAT_RELATIONS_HPP_

#include <span>
#include <string>
#include <vector>

#include "sublat/pair_class.hpp"
#include "sublat/space.hpp"

namespace sublat {

// Which structure the relations describe. Lattice relations carry any
// rational coefficient in [0,1]; algebra relations only 0 or 1.
enum class Mode { kLattice, kAlgebra };

std::string to_string(Mode mode);

// The constraint f(t) = lambda * f(s) with lambda in [0,1]. Zero
// constraints are written (t,t,0), keeping the triple format while making
// the zero set syntactically visible.
struct Relation {
  Relation(std::string t, std::string s, Scalar lambda);

  std::string t;
  std::string s;
  Scalar lambda;

  bool operator==(const Relation&) const = default;
};

// A canonical finite set of relations over a space. Construction
// canonicalizes: vacuous (t,t,1) triples are dropped, relations forcing a
// zero value are rewritten to (t,t,0), equality relations are oriented with
// the earlier point first, exact duplicates are removed and the result is
// sorted by point order. Conflicting coefficients on the same ordered pair
// are kept as-is; they simply contribute two constraint rows.
class RelationSystem {
 public:
  RelationSystem(SpacePtr space, std::vector<Relation> relations);

  static RelationSystem empty(SpacePtr space);

  const SpacePtr& space() const { return space_; }
  const std::vector<Relation>& relations() const { return relations_; }
  std::size_t size() const { return relations_.size(); }

  bool operator==(const RelationSystem& other) const {
    return *space_ == *other.space_ && relations_ == other.relations_;
  }

 private:
  SpacePtr space_;
  std::vector<Relation> relations_;
};

// The canonicalization pass on a raw relation list (the RelationSystem
// constructor applies it; exposed for direct use and testing).
std::vector<Relation> canonicalize(const FiniteSpace& space, std::vector<Relation> relations);

// The canonical relation system of a subspace: one relation per point pair
// whose projection is a proper sublattice line or zero, plus (t,t,0) for
// every point where all members vanish. In algebra mode, relations with
// coefficient strictly between 0 and 1 are suppressed; only axis and
// diagonal lines emit.
RelationSystem extract_relations(const Subspace& a, Mode mode);

// The subspace defined by a relation system: the kernel of the rows
// e_t - lambda * e_s.
Subspace relation_space(const RelationSystem& r);

// Same, on a raw (not canonicalized) relation list. This is the semantic
// reference for canonicalization tests.
Subspace relation_space(SpacePtr space, std::span<const Relation> relations);

// Exact check of f(t) = lambda * f(s).
bool satisfies(const FunctionVec& f, const Relation& r);

}  // namespace sublat

#endif  // SUBLAT_RELATIONS_HPP_
