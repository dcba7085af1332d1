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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "sublat/linalg.hpp"
#include "sublat/scalar.hpp"

using namespace sublat;
using namespace sublat::testing;

TEST_CASE("scalar parsing and printing") {
  CHECK(parse_scalar("1/2") == Scalar(1, 2));
  CHECK(parse_scalar("-3/6") == Scalar(-1, 2));
  CHECK(parse_scalar("7") == Scalar(7));
  CHECK(parse_scalar("-0") == Scalar(0));
  CHECK(parse_scalar("+2/4") == Scalar(1, 2));
  CHECK(to_string(parse_scalar("-3/6")) == "-1/2");
  CHECK(to_string(Scalar(4)) == "4");
  CHECK(to_string(Scalar(0)) == "0");

  CHECK_THROWS_AS(parse_scalar("0.5"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_scalar("0.5"),
                       "exact fractions required: invalid rational literal '0.5'",
                       std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("2e3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar(" 1"), std::invalid_argument);
}

TEST_CASE("scalar arithmetic is exact and normalized") {
  const Scalar a = parse_scalar("1/3");
  const Scalar b = parse_scalar("1/6");
  CHECK(a + b == Scalar(1, 2));
  CHECK(a - b == Scalar(1, 6));
  CHECK(a * b == Scalar(1, 18));
  CHECK(a / b == Scalar(2));
  CHECK(denominator(Scalar(2, 4)) == 2);
  CHECK(numerator(Scalar(2, 4)) == 1);
  CHECK(sign(Scalar(-1, 2)) == -1);
  CHECK(abs_val(Scalar(-1, 2)) == Scalar(1, 2));
}

TEST_CASE("canonical_basis on the worked examples") {
  // Expected value checked against the minor-rank oracle: the frozen rows
  // are in reduced echelon form, have rank 2, and span the same space as
  // the generators.
  const Rows gens = rows({{"1", "1", "0"}, {"0", "1", "1"}, {"1", "2", "1"}});
  const Rows expected = rows({{"1", "0", "-1"}, {"0", "1", "1"}});
  REQUIRE(minor_rank(gens, 3) == 2);
  REQUIRE(minor_rank(expected, 3) == 2);
  REQUIRE(same_span_oracle(gens, expected, 3));

  const Basis b = canonical_basis(Matrix::from_rows(gens, 3));
  CHECK(b.rank() == 2);
  CHECK(b.vectors() == expected);

  const Basis zero = canonical_basis(Matrix::from_rows(rows({{"0", "0"}}), 2));
  CHECK(zero.rank() == 0);

  const Basis line = canonical_basis(Matrix::from_rows(rows({{"2", "4"}}), 2));
  CHECK(line.vectors() == rows({{"1", "2"}}));

  CHECK_THROWS_AS(canonical_basis(Matrix::from_rows({}, 0)), std::invalid_argument);
}

TEST_CASE("kernel on the worked examples") {
  // f(x) = (1/2) f(y): the null space of (1, -1/2).
  const Rows constraint = rows({{"1", "-1/2"}});
  const Basis k = kernel(Matrix::from_rows(constraint, 2));
  CHECK(k.vectors() == rows({{"1", "2"}}));
  // Oracle: the frozen vector is annihilated and rank-nullity holds.
  CHECK(row({"1", "2"})[0] * constraint[0][0] + row({"1", "2"})[1] * constraint[0][1] == 0);
  CHECK(minor_rank(constraint, 2) + k.rank() == 2);

  const Basis full = kernel(Matrix::from_rows({}, 3));
  CHECK(full.rank() == 3);
  CHECK(full.vectors() == rows({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}}));

  const Basis none = kernel(Matrix::from_rows(rows({{"1", "0"}, {"0", "1"}}), 2));
  CHECK(none.rank() == 0);
}

TEST_CASE("member on the worked examples") {
  const Basis line = span_of_rows(rows({{"1", "2"}}), 2);
  CHECK(member(row({"2", "4"}), line));

  const Rows plane_rows = rows({{"1", "1", "0"}, {"0", "1", "1"}});
  const Basis plane = span_of_rows(plane_rows, 3);
  // Oracle: appending (1,1,1) raises the minor rank to 3.
  REQUIRE_FALSE(in_span_oracle(row({"1", "1", "1"}), plane_rows, 3));
  CHECK_FALSE(member(row({"1", "1", "1"}), plane));

  CHECK(member(row({"0", "0"}), Basis::empty(2)));
  CHECK_THROWS_AS(member(row({"1"}), line), std::invalid_argument);
}

TEST_CASE("compare on the worked examples") {
  const Basis a = span_of_rows(rows({{"1", "2"}}), 2);
  const Basis b = span_of_rows(rows({{"2", "4"}}), 2);
  CHECK(compare(a, b) == SubspaceOrder::kEqual);

  const Basis x_axis = span_of_rows(rows({{"1", "0"}}), 2);
  CHECK(compare(x_axis, Basis::full(2)) == SubspaceOrder::kFirstInsideSecond);
  CHECK(compare(Basis::full(2), x_axis) == SubspaceOrder::kSecondInsideFirst);

  const Basis y_axis = span_of_rows(rows({{"0", "1"}}), 2);
  CHECK(compare(x_axis, y_axis) == SubspaceOrder::kIncomparable);
  CHECK_THROWS_AS(compare(x_axis, Basis::full(3)), std::invalid_argument);
}

TEST_CASE("rank-nullity, idempotence and canonicity on random matrices") {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t cols = 1 + pick(rng, 5);
    const std::size_t nrows = pick(rng, 5);
    const Rows m = random_rows(rng, nrows, cols);
    const Matrix mat = Matrix::from_rows(m, cols);

    const Basis span = canonical_basis(mat);
    const Basis null = kernel(mat);
    CHECK(span.rank() + null.rank() == cols);
    CHECK(span.rank() == minor_rank(m, cols));

    // Idempotence: re-canonicalizing the basis changes nothing.
    CHECK(canonical_basis(Matrix::from_rows(span.vectors(), cols)) == span);

    // Every kernel vector is annihilated by every constraint row.
    for (const auto& v : null.vectors()) {
      for (const auto& c : m) {
        Scalar dot(0);
        for (std::size_t i = 0; i < cols; ++i) dot += c[i] * v[i];
        CHECK(dot == 0);
      }
    }
  }
}

TEST_CASE("member agrees with the minor-rank oracle and the rank test") {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 150; ++iter) {
    const std::size_t cols = 1 + pick(rng, 4);
    const Rows m = random_rows(rng, 1 + pick(rng, 3), cols);
    const Basis span = span_of_rows(m, cols);

    std::vector<Scalar> v(cols);
    for (auto& x : v) x = random_scalar(rng);

    const bool got = member(v, span);
    CHECK(got == in_span_oracle(v, m, cols));
    CHECK(got == (adjoin(span, v).rank() == span.rank()));
  }
}

TEST_CASE("canonical form is unique per span") {
  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t cols = 1 + pick(rng, 4);
    const Rows m = random_rows(rng, 1 + pick(rng, 3), cols);
    const Basis a = span_of_rows(m, cols);

    // Elementary row operations preserve the span exactly: scale a row by a
    // nonzero constant, then add a multiple of a different (current) row.
    Rows shuffled = m;
    for (int step = 0; step < 6; ++step) {
      const std::size_t r = pick(rng, shuffled.size());
      Scalar c = random_scalar(rng);
      if (c == 0) c = 1;
      for (auto& x : shuffled[r]) x *= c;
      const std::size_t other = pick(rng, shuffled.size());
      if (other != r) {
        const Scalar d = random_scalar(rng);
        for (std::size_t i = 0; i < cols; ++i) shuffled[r][i] += d * shuffled[other][i];
      }
    }
    const Basis b = span_of_rows(shuffled, cols);
    REQUIRE(same_span_oracle(m, shuffled, cols));
    CHECK(a == b);
    CHECK(compare(a, b) == SubspaceOrder::kEqual);
  }
}
