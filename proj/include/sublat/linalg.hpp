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

#ifndef SUBLAT_LINALG_HPP_
#define SUBLAT_LINALG_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "sublat/scalar.hpp"

namespace sublat {

// Dense row-major matrix of exact rationals. Used as a carrier for
// generator sets (rows span a subspace) and constraint systems (rows
// annihilate a subspace).
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Scalar> entries;  // rows * cols, row-major

  static Matrix zero(std::size_t rows, std::size_t cols);
  // Builds a matrix from a row list; every row must have length `cols`
  // (the explicit column count keeps zero-row matrices well formed).
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& row_list, std::size_t cols);

  Scalar& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  std::span<const Scalar> row(std::size_t r) const {
    return std::span<const Scalar>(entries).subspan(r * cols, cols);
  }
  void append_row(std::span<const Scalar> row);
};

// A subspace in canonical form: the vectors are the reduced row-echelon
// basis of the span (pivots equal 1, pivot columns strictly increasing and
// cleared elsewhere, no zero rows). Canonicity makes subspace equality an
// entry-wise comparison.
class Basis {
 public:
  static Basis empty(std::size_t ambient_dim);
  static Basis full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return vectors_.size(); }
  const std::vector<std::vector<Scalar>>& vectors() const { return vectors_; }

  bool operator==(const Basis&) const = default;

 private:
  Basis(std::size_t ambient_dim, std::vector<std::vector<Scalar>> vectors)
      : ambient_dim_(ambient_dim), vectors_(std::move(vectors)) {}

  friend Basis canonical_basis(const Matrix& generators);

  std::size_t ambient_dim_ = 0;
  std::vector<std::vector<Scalar>> vectors_;
};

// Canonical RREF basis of the row span of `generators`. Rejects ambient
// dimension zero as malformed.
Basis canonical_basis(const Matrix& generators);

// Canonical basis of {v : constraints * v = 0}. Satisfies
// rank(kernel) + rank(constraints) = cols.
Basis kernel(const Matrix& constraints);

// Exact membership of v in span(s); throws on dimension mismatch.
bool member(std::span<const Scalar> v, const Basis& s);

enum class SubspaceOrder {
  kEqual,
  kFirstInsideSecond,   // s is a strict subspace of t
  kSecondInsideFirst,   // t is a strict subspace of s
  kIncomparable,
};

// Containment comparison of two subspaces over the same ambient space.
SubspaceOrder compare(const Basis& s, const Basis& t);

// Convenience: canonical span of a row list.
Basis span_of_rows(const std::vector<std::vector<Scalar>>& row_list, std::size_t ambient_dim);

// Canonical span of s together with one extra vector.
Basis adjoin(const Basis& s, std::span<const Scalar> v);

}  // namespace sublat

#endif  // SUBLAT_LINALG_HPP_
