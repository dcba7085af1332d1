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

#include "sublat/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace sublat {

Matrix Matrix::zero(std::size_t rows, std::size_t cols) {
  Matrix m;
  m.rows = rows;
  m.cols = cols;
  m.entries.assign(rows * cols, Scalar(0));
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& row_list, std::size_t cols) {
  Matrix m;
  m.cols = cols;
  for (const auto& r : row_list) m.append_row(r);
  return m;
}

void Matrix::append_row(std::span<const Scalar> row) {
  if (row.size() != cols) throw std::invalid_argument("matrix row length mismatch");
  entries.insert(entries.end(), row.begin(), row.end());
  ++rows;
}

Basis Basis::empty(std::size_t ambient_dim) {
  return canonical_basis(Matrix::from_rows({}, ambient_dim));
}

Basis Basis::full(std::size_t ambient_dim) {
  std::vector<std::vector<Scalar>> rows(ambient_dim, std::vector<Scalar>(ambient_dim, Scalar(0)));
  for (std::size_t i = 0; i < ambient_dim; ++i) rows[i][i] = 1;
  return canonical_basis(Matrix::from_rows(rows, ambient_dim));
}

Basis canonical_basis(const Matrix& generators) {
  const std::size_t n = generators.cols;
  if (n == 0) throw std::invalid_argument("ambient dimension must be at least 1");

  std::vector<std::vector<Scalar>> rows;
  rows.reserve(generators.rows);
  for (std::size_t r = 0; r < generators.rows; ++r) {
    auto row = generators.row(r);
    rows.emplace_back(row.begin(), row.end());
  }

  // Gauss-Jordan elimination. Pivot columns come out strictly increasing,
  // pivots are scaled to 1 and cleared above and below.
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n && pivot_row < rows.size(); ++col) {
    std::size_t found = rows.size();
    for (std::size_t r = pivot_row; r < rows.size(); ++r) {
      if (rows[r][col] != 0) {
        found = r;
        break;
      }
    }
    if (found == rows.size()) continue;
    std::swap(rows[pivot_row], rows[found]);

    const Scalar inv_pivot = Scalar(1) / rows[pivot_row][col];
    for (std::size_t c = col; c < n; ++c) rows[pivot_row][c] *= inv_pivot;

    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col] == 0) continue;
      const Scalar factor = rows[r][col];
      for (std::size_t c = col; c < n; ++c) rows[r][c] -= factor * rows[pivot_row][c];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return Basis(n, std::move(rows));
}

Basis kernel(const Matrix& constraints) {
  const std::size_t n = constraints.cols;
  const Basis reduced = canonical_basis(constraints);

  std::vector<bool> is_pivot(n, false);
  std::vector<std::size_t> pivot_col(reduced.rank());
  for (std::size_t r = 0; r < reduced.rank(); ++r) {
    const auto& row = reduced.vectors()[r];
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    pivot_col[r] = p;
    is_pivot[p] = true;
  }

  std::vector<std::vector<Scalar>> null_vectors;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Scalar> v(n, Scalar(0));
    v[free_col] = 1;
    for (std::size_t r = 0; r < reduced.rank(); ++r) {
      v[pivot_col[r]] = -reduced.vectors()[r][free_col];
    }
    null_vectors.push_back(std::move(v));
  }
  return canonical_basis(Matrix::from_rows(null_vectors, n));
}

bool member(std::span<const Scalar> v, const Basis& s) {
  if (v.size() != s.ambient_dim()) throw std::invalid_argument("dimension mismatch in member");
  std::vector<Scalar> w(v.begin(), v.end());
  for (const auto& row : s.vectors()) {
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    if (w[p] == 0) continue;
    const Scalar factor = w[p];
    for (std::size_t c = p; c < w.size(); ++c) w[c] -= factor * row[c];
  }
  return std::all_of(w.begin(), w.end(), [](const Scalar& x) { return x == 0; });
}

SubspaceOrder compare(const Basis& s, const Basis& t) {
  if (s.ambient_dim() != t.ambient_dim()) {
    throw std::invalid_argument("dimension mismatch in compare");
  }
  if (s == t) return SubspaceOrder::kEqual;
  auto contained = [](const Basis& a, const Basis& b) {
    for (const auto& row : a.vectors()) {
      if (!member(row, b)) return false;
    }
    return true;
  };
  if (contained(s, t)) return SubspaceOrder::kFirstInsideSecond;
  if (contained(t, s)) return SubspaceOrder::kSecondInsideFirst;
  return SubspaceOrder::kIncomparable;
}

Basis span_of_rows(const std::vector<std::vector<Scalar>>& row_list, std::size_t ambient_dim) {
  return canonical_basis(Matrix::from_rows(row_list, ambient_dim));
}

Basis adjoin(const Basis& s, std::span<const Scalar> v) {
  Matrix m = Matrix::from_rows(s.vectors(), s.ambient_dim());
  m.append_row(v);
  return canonical_basis(m);
}

}  // namespace sublat
