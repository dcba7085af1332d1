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

#ifndef SUBLAT_SPACE_HPP_
#define SUBLAT_SPACE_HPP_

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sublat/linalg.hpp"
#include "sublat/scalar.hpp"

namespace sublat {

// A finite discrete point set with distinct, ordered string labels. The
// label order fixes the coordinate order of every function vector, basis
// row and report over the space.
class FiniteSpace {
 public:
  explicit FiniteSpace(std::vector<std::string> labels);

  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& label(std::size_t i) const { return points_[i]; }
  std::size_t index(std::string_view label) const;  // throws on unknown label
  bool contains(std::string_view label) const;

  bool operator==(const FiniteSpace& other) const { return points_ == other.points_; }

 private:
  std::vector<std::string> points_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

using SpacePtr = std::shared_ptr<const FiniteSpace>;

SpacePtr make_space(std::vector<std::string> labels);

// One rational value per point of a FiniteSpace.
class FunctionVec {
 public:
  FunctionVec(SpacePtr space, std::vector<Scalar> values);

  const SpacePtr& space() const { return space_; }
  const std::vector<Scalar>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const Scalar& operator[](std::size_t i) const { return values_[i]; }
  const Scalar& at(std::string_view label) const { return values_[space_->index(label)]; }

  bool operator==(const FunctionVec& other) const {
    return *space_ == *other.space_ && values_ == other.values_;
  }

 private:
  SpacePtr space_;
  std::vector<Scalar> values_;
};

FunctionVec operator+(const FunctionVec& f, const FunctionVec& g);
FunctionVec operator-(const FunctionVec& f, const FunctionVec& g);
FunctionVec operator*(const Scalar& c, const FunctionVec& f);

FunctionVec pointwise_max(const FunctionVec& f, const FunctionVec& g);
FunctionVec pointwise_min(const FunctionVec& f, const FunctionVec& g);

struct LatticePair {
  FunctionVec max;
  FunctionVec min;
};

// Pointwise max and min of a pair of functions over the same space.
LatticePair lattice_ops(const FunctionVec& f, const FunctionVec& g);

// Pointwise multiplication.
FunctionVec product(const FunctionVec& f, const FunctionVec& g);

// max over points of |f(p)|.
Scalar sup_norm(const FunctionVec& f);

// A linear subspace of the functions on a space, in canonical reduced-basis
// form. The basis ambient dimension always equals the space size.
struct Subspace {
  SpacePtr space;
  Basis basis;

  bool operator==(const Subspace& other) const {
    return *space == *other.space && basis == other.basis;
  }
};

Subspace make_subspace(SpacePtr space, const Matrix& generators);
Subspace make_subspace(SpacePtr space, const std::vector<std::vector<Scalar>>& generator_rows);

// Membership of a function in a subspace over the same space.
bool member(const FunctionVec& f, const Subspace& a);

// The i-th canonical basis vector of the subspace, as a function.
FunctionVec basis_function(const Subspace& a, std::size_t i);

}  // namespace sublat

#endif  // SUBLAT_SPACE_HPP_
