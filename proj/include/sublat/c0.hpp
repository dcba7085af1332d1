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

#ifndef SUBLAT_C0_HPP_
#define SUBLAT_C0_HPP_

#include "sublat/analysis.hpp"
#include "sublat/relations.hpp"
#include "sublat/space.hpp"

namespace sublat {

// One-point compactification of a base space T: the same points followed by
// a reserved point at infinity. Functions on T correspond to functions on
// the full space vanishing at infinity, and that correspondence preserves
// sums, norms and lattice operations.
struct CompactifiedSpace {
  SpacePtr base;
  std::string infinity_label;
  SpacePtr full;  // base points first, infinity last
};

inline constexpr const char* kDefaultInfinityLabel = "∞";

// Throws if the infinity label collides with a base point.
CompactifiedSpace compactify(SpacePtr base, std::string infinity_label = kDefaultInfinityLabel);

// Extends f by the value 0 at infinity.
FunctionVec embed(const CompactifiedSpace& cs, const FunctionVec& f);

// Drops the infinity coordinate; rejects functions not vanishing there.
FunctionVec restrict_to_base(const CompactifiedSpace& cs, const FunctionVec& g);

// Embeds every generator; the span lives inside the functions vanishing at
// infinity.
Subspace embed_subspace(const CompactifiedSpace& cs, const Subspace& a);

struct C0Analysis {
  RelationSystem relations;  // over the base space only
  Subspace hull;             // over the base space
  bool holds;                // sublattice / subalgebra decision
};

// Decides the structure of a subspace of the functions vanishing at
// infinity: embeds the generators, adjoins the defining zero relation at
// infinity, extracts and decides there, then rewrites every relation that
// mentions infinity into an equivalent base-only zero relation and
// restricts the hull back to the base space.
C0Analysis c0_analyze(const CompactifiedSpace& cs, const Subspace& a, Mode mode);

// Full report over the base space, including a witness search in the
// compactified space when the structure is absent.
AnalysisReport c0_analyze_report(const CompactifiedSpace& cs, const Subspace& a,
                                 Mode witness_mode, std::uint64_t seed = kDefaultSeed,
                                 std::size_t budget = kDefaultBudget);

}  // namespace sublat

#endif  // SUBLAT_C0_HPP_
