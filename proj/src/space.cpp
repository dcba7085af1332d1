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

#include "sublat/space.hpp"

#include <algorithm>
#include <stdexcept>

namespace sublat {

namespace {

void require_same_space(const FunctionVec& f, const FunctionVec& g) {
  if (!(*f.space() == *g.space())) {
    throw std::invalid_argument("functions live on different spaces");
  }
}

}  // namespace

FiniteSpace::FiniteSpace(std::vector<std::string> labels) : points_(std::move(labels)) {
  if (points_.empty()) throw std::invalid_argument("a space needs at least one point");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    auto [it, inserted] = index_.emplace(points_[i], i);
    if (!inserted) throw std::invalid_argument("duplicate point label '" + points_[i] + "'");
  }
}

std::size_t FiniteSpace::index(std::string_view label) const {
  auto it = index_.find(label);
  if (it == index_.end()) {
    throw std::invalid_argument("unknown point label '" + std::string(label) + "'");
  }
  return it->second;
}

bool FiniteSpace::contains(std::string_view label) const {
  return index_.find(label) != index_.end();
}

SpacePtr make_space(std::vector<std::string> labels) {
  return std::make_shared<const FiniteSpace>(std::move(labels));
}

FunctionVec::FunctionVec(SpacePtr space, std::vector<Scalar> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw std::invalid_argument("function needs a space");
  if (values_.size() != space_->size()) {
    throw std::invalid_argument("function value count does not match the space");
  }
}

FunctionVec operator+(const FunctionVec& f, const FunctionVec& g) {
  require_same_space(f, g);
  std::vector<Scalar> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[i] + g[i];
  return FunctionVec(f.space(), std::move(out));
}

FunctionVec operator-(const FunctionVec& f, const FunctionVec& g) {
  require_same_space(f, g);
  std::vector<Scalar> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[i] - g[i];
  return FunctionVec(f.space(), std::move(out));
}

FunctionVec operator*(const Scalar& c, const FunctionVec& f) {
  std::vector<Scalar> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * f[i];
  return FunctionVec(f.space(), std::move(out));
}

FunctionVec pointwise_max(const FunctionVec& f, const FunctionVec& g) {
  require_same_space(f, g);
  std::vector<Scalar> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(f[i], g[i]);
  return FunctionVec(f.space(), std::move(out));
}

FunctionVec pointwise_min(const FunctionVec& f, const FunctionVec& g) {
  require_same_space(f, g);
  std::vector<Scalar> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(f[i], g[i]);
  return FunctionVec(f.space(), std::move(out));
}

LatticePair lattice_ops(const FunctionVec& f, const FunctionVec& g) {
  return LatticePair{pointwise_max(f, g), pointwise_min(f, g)};
}

FunctionVec product(const FunctionVec& f, const FunctionVec& g) {
  require_same_space(f, g);
  std::vector<Scalar> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[i] * g[i];
  return FunctionVec(f.space(), std::move(out));
}

Scalar sup_norm(const FunctionVec& f) {
  Scalar best(0);
  for (const Scalar& v : f.values()) best = std::max(best, abs_val(v));
  return best;
}

Subspace make_subspace(SpacePtr space, const Matrix& generators) {
  if (generators.cols != space->size()) {
    throw std::invalid_argument("generator width does not match the space");
  }
  return Subspace{std::move(space), canonical_basis(generators)};
}

Subspace make_subspace(SpacePtr space, const std::vector<std::vector<Scalar>>& generator_rows) {
  const std::size_t n = space->size();
  return make_subspace(std::move(space), Matrix::from_rows(generator_rows, n));
}

bool member(const FunctionVec& f, const Subspace& a) {
  if (!(*f.space() == *a.space)) {
    throw std::invalid_argument("function and subspace live on different spaces");
  }
  return member(std::span<const Scalar>(f.values()), a.basis);
}

FunctionVec basis_function(const Subspace& a, std::size_t i) {
  return FunctionVec(a.space, a.basis.vectors().at(i));
}

}  // namespace sublat
