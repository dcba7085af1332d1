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

#include "sublat/analysis.hpp"

#include <random>
#include <stdexcept>

namespace sublat {

namespace {

// Deterministic small-rational generator. Raw engine output is reduced by
// hand so results do not depend on the standard library's distribution
// implementations.
Scalar random_coefficient(std::mt19937_64& rng) {
  const int num = static_cast<int>(rng() % 7) - 3;     // -3 .. 3
  const int den = static_cast<int>(rng() % 2) + 1;     // 1 or 2
  return Scalar(num, den);
}

FunctionVec random_combination(const Subspace& a, std::mt19937_64& rng) {
  std::vector<Scalar> v(a.space->size(), Scalar(0));
  for (const auto& row : a.basis.vectors()) {
    const Scalar c = random_coefficient(rng);
    if (c == 0) continue;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * row[i];
  }
  return FunctionVec(a.space, std::move(v));
}

// Picks h in a with (h(x), h(y)) equal to the classified line direction.
// The projection is onto the line, so some basis vector projects to a
// nonzero multiple of (a, b); since a != 0 for every line handled here,
// that vector has a nonzero x-coordinate to scale by.
FunctionVec lift_to_line(const Subspace& a, std::size_t ix, const PairClass& cls) {
  for (const auto& row : a.basis.vectors()) {
    if (row[ix] == 0) continue;
    const Scalar rho = row[ix] / cls.a;
    return (Scalar(1) / rho) * FunctionVec(a.space, row);
  }
  throw std::logic_error("line projection without a lifting basis vector");
}

}  // namespace

std::string to_string(WitnessOp op) {
  switch (op) {
    case WitnessOp::kMax:
      return "max";
    case WitnessOp::kMin:
      return "min";
    case WitnessOp::kProduct:
      return "product";
  }
  return "?";
}

Subspace hull(const Subspace& a, Mode mode) {
  return relation_space(extract_relations(a, mode));
}

bool decide(const Subspace& a, Mode mode) {
  return compare(a.basis, hull(a, mode).basis) == SubspaceOrder::kEqual;
}

bool direct_algebra_check(const Subspace& a) {
  const std::size_t k = a.basis.rank();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      const FunctionVec p = product(basis_function(a, i), basis_function(a, j));
      if (!member(p, a)) return false;
    }
  }
  return true;
}

std::optional<Witness> witness(const Subspace& a, Mode mode, std::uint64_t seed,
                               std::size_t budget) {
  if (decide(a, mode)) {
    throw std::logic_error("witness requested although the subspace has the structure");
  }
  const FiniteSpace& space = *a.space;
  const std::size_t n = space.size();

  // Phase 1: lift a failing 2-D line.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const PairClass cls = classify_pair(project_pair(a, space.label(i), space.label(j)));
      const bool mixed = cls.kind == PairKind::kLineMixed;
      const bool bad_line =
          mixed || (cls.kind == PairKind::kLineAligned && !is_algebra_class(cls));
      if (mode == Mode::kLattice ? !mixed : !bad_line) continue;

      const FunctionVec h = lift_to_line(a, i, cls);
      if (mode == Mode::kLattice) {
        const FunctionVec two_h = Scalar(2) * h;
        return Witness{h, two_h, pointwise_min(h, two_h), WitnessOp::kMin};
      }
      return Witness{h, h, product(h, h), WitnessOp::kProduct};
    }
  }

  // Phase 2: basis pairs, then random combinations.
  const WitnessOp op = mode == Mode::kLattice ? WitnessOp::kMax : WitnessOp::kProduct;
  auto attempt = [&](const FunctionVec& f, const FunctionVec& g) -> std::optional<Witness> {
    FunctionVec combined =
        mode == Mode::kLattice ? pointwise_max(f, g) : product(f, g);
    if (!member(combined, a)) return Witness{f, g, std::move(combined), op};
    return std::nullopt;
  };

  std::size_t attempts = 0;
  const std::size_t k = a.basis.rank();
  for (std::size_t i = 0; i < k && attempts < budget; ++i) {
    // max(f, f) = f never leaves the span, but f * f can.
    for (std::size_t j = (mode == Mode::kLattice ? i + 1 : i); j < k && attempts < budget;
         ++j) {
      ++attempts;
      if (auto w = attempt(basis_function(a, i), basis_function(a, j))) return w;
    }
  }

  std::mt19937_64 rng(seed);
  while (attempts < budget) {
    ++attempts;
    const FunctionVec f = random_combination(a, rng);
    const FunctionVec g = random_combination(a, rng);
    if (auto w = attempt(f, g)) return w;
  }
  return std::nullopt;
}

bool member_by_pairs(const FunctionVec& f, const Subspace& a) {
  if (!(*f.space() == *a.space)) {
    throw std::invalid_argument("function and subspace live on different spaces");
  }
  const FiniteSpace& space = *a.space;
  const std::size_t n = space.size();
  if (n == 1) return member(f, a);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const PairProjection proj = project_pair(a, space.label(i), space.label(j));
      const std::vector<Scalar> point{f[i], f[j]};
      if (!member(point, proj.proj_basis)) return false;
    }
  }
  return true;
}

SeparationReport separation_report(const Subspace& a) {
  const FiniteSpace& space = *a.space;
  const std::size_t n = space.size();
  SeparationReport report;

  for (std::size_t i = 0; i < n; ++i) {
    bool all_zero = true;
    for (const auto& row : a.basis.vectors()) {
      if (row[i] != 0) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) report.zero_set.push_back(space.label(i));
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const PairClass cls = classify_pair(project_pair(a, space.label(i), space.label(j)));
      const bool diagonal =
          cls.kind == PairKind::kLineAligned && cls.a == 1 && cls.b == 1;
      if (cls.kind == PairKind::kZero || diagonal) {
        report.non_separated_pairs.emplace_back(space.label(i), space.label(j));
      }
    }
  }
  report.separates = report.non_separated_pairs.empty();
  return report;
}

ClosureResult iterative_closure_oracle(const Subspace& a, std::uint64_t seed,
                                       std::size_t budget) {
  Subspace current = a;
  std::mt19937_64 rng(seed);
  std::size_t attempts = 0;

  while (true) {
    if (decide(current, Mode::kLattice)) return ClosureResult{current, true};

    bool grew = false;
    const auto rows = current.basis.vectors();
    for (std::size_t i = 0; i < rows.size() && !grew; ++i) {
      for (std::size_t j = i + 1; j < rows.size() && !grew; ++j) {
        if (attempts >= budget) break;
        ++attempts;
        std::vector<Scalar> mx(rows[i].size());
        for (std::size_t c = 0; c < mx.size(); ++c) mx[c] = std::max(rows[i][c], rows[j][c]);
        if (!member(mx, current.basis)) {
          current.basis = adjoin(current.basis, mx);
          grew = true;
        }
      }
    }
    while (!grew && attempts < budget) {
      ++attempts;
      const FunctionVec f = random_combination(current, rng);
      const FunctionVec g = random_combination(current, rng);
      const FunctionVec mx = pointwise_max(f, g);
      if (!member(mx, current)) {
        current.basis = adjoin(current.basis, mx.values());
        grew = true;
      }
    }
    if (!grew) return ClosureResult{current, false};
  }
}

AnalysisReport analyze(const Subspace& a, Mode witness_mode, std::uint64_t seed,
                       std::size_t budget) {
  Subspace lat_hull = hull(a, Mode::kLattice);
  Subspace alg_hull = hull(a, Mode::kAlgebra);
  const bool is_sublattice = compare(a.basis, lat_hull.basis) == SubspaceOrder::kEqual;
  const bool is_subalgebra = compare(a.basis, alg_hull.basis) == SubspaceOrder::kEqual;
  SeparationReport sep = separation_report(a);

  AnalysisReport report{
      is_sublattice,
      is_subalgebra,
      std::move(lat_hull),
      std::move(alg_hull),
      extract_relations(a, Mode::kLattice),
      extract_relations(a, Mode::kAlgebra),
      sep.separates,
      std::move(sep.non_separated_pairs),
      std::move(sep.zero_set),
      witness_mode,
      std::nullopt,
      "",
  };

  const bool holds = witness_mode == Mode::kLattice ? is_sublattice : is_subalgebra;
  if (!holds) {
    report.witness_found = witness(a, witness_mode, seed, budget);
    if (!report.witness_found) {
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
