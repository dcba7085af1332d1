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

#ifndef SUBLAT_ANALYSIS_HPP_
#define SUBLAT_ANALYSIS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sublat/relations.hpp"
#include "sublat/space.hpp"

namespace sublat {

// Smallest sublattice (lattice mode) or subalgebra (algebra mode)
// containing a: the kernel of every relation the subspace satisfies.
Subspace hull(const Subspace& a, Mode mode);

// True iff a equals its own hull, i.e. a is a sublattice / subalgebra.
bool decide(const Subspace& a, Mode mode);

// Independent subalgebra test: closure of the basis under pointwise
// products. Complete because multiplication is bilinear. Must always agree
// with decide(a, kAlgebra).
bool direct_algebra_check(const Subspace& a);

enum class WitnessOp { kMax, kMin, kProduct };

std::string to_string(WitnessOp op);

// Two members of a subspace whose pointwise max/min/product leaves it,
// certifying failure of closure.
struct Witness {
  FunctionVec f;
  FunctionVec g;
  FunctionVec combined;
  WitnessOp op;
};

// Searches for an explicit counterexample pair. Requires decide(a, mode)
// to be false (throws std::logic_error otherwise).
//
// Phase 1 is deterministic: a point pair whose projection is a line that
// fails the 2-D catalog lifts directly to a witness (mixed-sign lines via
// min(h, 2h); non-algebra lines via h*h in algebra mode). Phase 2 tries
// basis pairs, then seeded random rational combinations, up to `budget`
// attempts; it may come back empty even though the structure is absent.
std::optional<Witness> witness(const Subspace& a, Mode mode, std::uint64_t seed,
                               std::size_t budget);

// True iff (f(x), f(y)) lies in the pair projection of a for every point
// pair. Equivalent to member(f, a) when a is a sublattice; may disagree
// otherwise.
bool member_by_pairs(const FunctionVec& f, const Subspace& a);

struct SeparationReport {
  bool separates;
  // Pairs (x, y), x before y in point order, with f(x) = f(y) for all f.
  std::vector<std::pair<std::string, std::string>> non_separated_pairs;
  // Points where every member vanishes.
  std::vector<std::string> zero_set;
};

SeparationReport separation_report(const Subspace& a);

struct ClosureResult {
  Subspace closure;
  bool converged;
};

// Independent oracle for the lattice hull: repeatedly adjoins pointwise
// maxima (of basis vectors, then of seeded random combinations) and
// re-spans until the result is a sublattice or the budget runs out. The
// result always satisfies a <= closure <= hull(a, kLattice), so on
// convergence it equals the hull.
ClosureResult iterative_closure_oracle(const Subspace& a, std::uint64_t seed,
                                       std::size_t budget);

inline constexpr std::uint64_t kDefaultSeed = 0;
inline constexpr std::size_t kDefaultBudget = 1000;

// Everything the CLI reports about one subspace.
struct AnalysisReport {
  bool is_sublattice;
  bool is_subalgebra;
  Subspace lattice_hull;
  Subspace algebra_hull;
  RelationSystem relations_lattice;
  RelationSystem relations_algebra;
  bool separates_points;
  std::vector<std::pair<std::string, std::string>> non_separated_pairs;
  std::vector<std::string> zero_set;
  Mode witness_mode;
  std::optional<Witness> witness_found;
  std::string witness_note;
};

// Runs the full analysis; a witness is searched in `witness_mode` when that
// structure is absent.
AnalysisReport analyze(const Subspace& a, Mode witness_mode, std::uint64_t seed = kDefaultSeed,
                       std::size_t budget = kDefaultBudget);

}  // namespace sublat

#endif  // SUBLAT_ANALYSIS_HPP_
