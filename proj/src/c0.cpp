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

#include "sublat/c0.hpp"

#include <stdexcept>

namespace sublat {

CompactifiedSpace compactify(SpacePtr base, std::string infinity_label) {
  if (base->contains(infinity_label)) {
    throw std::invalid_argument("infinity label '" + infinity_label +
                                "' collides with a base point; pick another label");
  }
  std::vector<std::string> labels = base->points();
  labels.push_back(infinity_label);
  return CompactifiedSpace{std::move(base), infinity_label, make_space(std::move(labels))};
}

FunctionVec embed(const CompactifiedSpace& cs, const FunctionVec& f) {
  if (!(*f.space() == *cs.base)) {
    throw std::invalid_argument("function does not live on the base space");
  }
  std::vector<Scalar> values = f.values();
  values.emplace_back(0);
  return FunctionVec(cs.full, std::move(values));
}

FunctionVec restrict_to_base(const CompactifiedSpace& cs, const FunctionVec& g) {
  if (!(*g.space() == *cs.full)) {
    throw std::invalid_argument("function does not live on the compactified space");
  }
  if (g.values().back() != 0) {
    throw std::invalid_argument("function does not vanish at infinity");
  }
  std::vector<Scalar> values(g.values().begin(), g.values().end() - 1);
  return FunctionVec(cs.base, std::move(values));
}

Subspace embed_subspace(const CompactifiedSpace& cs, const Subspace& a) {
  if (!(*a.space == *cs.base)) {
    throw std::invalid_argument("subspace does not live on the base space");
  }
  std::vector<std::vector<Scalar>> rows = a.basis.vectors();
  for (auto& row : rows) row.emplace_back(0);
  return make_subspace(cs.full, rows);
}

namespace {

// Restricts a subspace of functions vanishing at infinity back to the base.
Subspace restrict_subspace(const CompactifiedSpace& cs, const Subspace& s) {
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(s.basis.rank());
  for (const auto& row : s.basis.vectors()) {
    if (row.back() != 0) {
      throw std::logic_error("hull does not vanish at infinity");
    }
    rows.emplace_back(row.begin(), row.end() - 1);
  }
  return make_subspace(cs.base, rows);
}

}  // namespace

C0Analysis c0_analyze(const CompactifiedSpace& cs, const Subspace& a, Mode mode) {
  const Subspace embedded = embed_subspace(cs, a);

  std::vector<Relation> rels = extract_relations(embedded, mode).relations();
  rels.emplace_back(cs.infinity_label, cs.infinity_label, Scalar(0));
  const RelationSystem full_system(cs.full, std::move(rels));

  const Subspace full_hull = relation_space(full_system);
  const bool holds = compare(embedded.basis, full_hull.basis) == SubspaceOrder::kEqual;

  // Base-only form: relations touching infinity collapse to zero
  // constraints on the other point (or vanish outright). The kernel inside
  // the functions vanishing at infinity is unchanged.
  std::vector<Relation> base_rels;
  for (const Relation& r : full_system.relations()) {
    const bool t_inf = r.t == cs.infinity_label;
    const bool s_inf = r.s == cs.infinity_label;
    if (t_inf && s_inf) continue;            // internal to the embedding
    if (s_inf) {
      base_rels.emplace_back(r.t, r.t, Scalar(0));   // f(t) = lambda * 0
    } else if (t_inf) {
      if (r.lambda != 0) base_rels.emplace_back(r.s, r.s, Scalar(0));  // 0 = lambda * f(s)
    } else {
      base_rels.push_back(r);
    }
  }

  return C0Analysis{RelationSystem(cs.base, std::move(base_rels)),
                    restrict_subspace(cs, full_hull), holds};
}

AnalysisReport c0_analyze_report(const CompactifiedSpace& cs, const Subspace& a,
                                 Mode witness_mode, std::uint64_t seed, std::size_t budget) {
  C0Analysis lattice = c0_analyze(cs, a, Mode::kLattice);
  C0Analysis algebra = c0_analyze(cs, a, Mode::kAlgebra);
  SeparationReport sep = separation_report(a);

  AnalysisReport report{
      lattice.holds,
      algebra.holds,
      std::move(lattice.hull),
      std::move(algebra.hull),
      std::move(lattice.relations),
      std::move(algebra.relations),
      sep.separates,
      std::move(sep.non_separated_pairs),
      std::move(sep.zero_set),
      witness_mode,
      std::nullopt,
      "",
  };

  const bool holds = witness_mode == Mode::kLattice ? report.is_sublattice : report.is_subalgebra;
  if (!holds) {
    // Search in the compactified space; every function involved vanishes at
    // infinity, so the triple restricts back to the base.
    const Subspace embedded = embed_subspace(cs, a);
    if (auto w = witness(embedded, witness_mode, seed, budget)) {
      report.witness_found = Witness{restrict_to_base(cs, w->f), restrict_to_base(cs, w->g),
                                     restrict_to_base(cs, w->combined), w->op};
    } else {
      report.witness_note = witness_mode == Mode::kLattice
                                ? "not a sublattice (the relation hull is strictly larger); "
                                  "no explicit witness found within budget"
                                : "not a subalgebra (the relation hull is strictly larger); "
                                  "no explicit witness found within budget";
    }
  }
  return report;
}

}  // namespace sublat
