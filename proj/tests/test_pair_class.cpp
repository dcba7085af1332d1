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
#include "sublat/pair_class.hpp"

using namespace sublat;
using namespace sublat::testing;

namespace {

PairClass classify_line(const char* a, const char* b) {
  const Subspace line = sub(spc(2), {{a, b}});
  return classify_pair(project_pair(line, "p0", "p1"));
}

}  // namespace

TEST_CASE("pair projection on the worked examples") {
  const Subspace plane = sub(spc(3), {{"1", "1", "0"}, {"0", "1", "1"}});
  const PairProjection full = project_pair(plane, "p0", "p1");
  CHECK(full.proj_basis.rank() == 2);
  CHECK(classify_pair(full).kind == PairKind::kFull);

  const Subspace line = sub(spc(2), {{"1", "2"}});
  const PairProjection pl = project_pair(line, "p0", "p1");
  CHECK(pl.proj_basis.rank() == 1);
  CHECK(pl.proj_basis.vectors() == rows({{"1", "2"}}));

  const Subspace zero = sub(spc(2), {});
  CHECK(project_pair(zero, "p0", "p1").proj_basis.rank() == 0);
  CHECK(classify_pair(project_pair(zero, "p0", "p1")).kind == PairKind::kZero);

  CHECK_THROWS_AS(project_pair(line, "p0", "p0"), std::invalid_argument);
  CHECK_THROWS_AS(project_pair(line, "p0", "q"), std::invalid_argument);
}

TEST_CASE("classification of the catalog lines") {
  // A mixed-sign line is not a 2-D sublattice.
  CHECK(classify_line("-1", "2") ==
        PairClass{PairKind::kLineMixed, Scalar(-1, 2), Scalar(1)});
  CHECK(classify_line("1", "2") ==
        PairClass{PairKind::kLineAligned, Scalar(1, 2), Scalar(1)});
  CHECK(classify_line("3", "3") == PairClass{PairKind::kLineAligned, Scalar(1), Scalar(1)});
  CHECK(is_algebra_class(classify_line("3", "3")));

  CHECK(classify_line("0", "5") == PairClass{PairKind::kLineAligned, Scalar(0), Scalar(1)});
  CHECK(classify_line("-4", "0") == PairClass{PairKind::kLineAligned, Scalar(1), Scalar(0)});
  CHECK(classify_line("2", "1") == PairClass{PairKind::kLineAligned, Scalar(1), Scalar(1, 2)});
  CHECK(classify_line("2", "-1") ==
        PairClass{PairKind::kLineMixed, Scalar(-1), Scalar(1, 2)});

  CHECK(is_algebra_class(classify_line("0", "5")));
  CHECK(is_algebra_class(classify_line("-4", "0")));
  CHECK_FALSE(is_algebra_class(classify_line("1", "2")));
  CHECK_FALSE(is_algebra_class(classify_line("2", "-1")));
}

TEST_CASE("classification is exhaustive and scaling invariant") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    Scalar a = random_scalar(rng), b = random_scalar(rng);
    if (a == 0 && b == 0) a = 1;
    const PairClass cls = classify_line(to_string(a).c_str(), to_string(b).c_str());
    CHECK((cls.kind == PairKind::kLineAligned || cls.kind == PairKind::kLineMixed));
    CHECK((cls.kind == PairKind::kLineAligned) == (a * b >= 0));

    Scalar lambda = random_scalar(rng);
    if (lambda == 0) lambda = Scalar(-5, 3);
    const PairClass scaled =
        classify_line(to_string(lambda * a).c_str(), to_string(lambda * b).c_str());
    CHECK(cls == scaled);
  }

  CHECK(classify_pair(project_pair(sub(spc(2), {}), "p0", "p1")).kind == PairKind::kZero);
  CHECK(classify_pair(project_pair(sub(spc(2), {{"1", "0"}, {"0", "1"}}), "p0", "p1")).kind ==
        PairKind::kFull);
}

TEST_CASE("mixed lines fail lattice closure at the classified direction") {
  std::mt19937_64 rng(12);
  int mixed_seen = 0;
  for (int iter = 0; iter < 400; ++iter) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng);
    if (a * b >= 0) continue;
    ++mixed_seen;
    const SpacePtr s = spc(2);
    const Subspace line = sub(s, {{to_string(a).c_str(), to_string(b).c_str()}});
    const PairClass cls = classify_pair(project_pair(line, "p0", "p1"));
    REQUIRE(cls.kind == PairKind::kLineMixed);
    CHECK(cls.a < 0);
    CHECK(cls.b > 0);
    CHECK(std::max(abs_val(cls.a), cls.b) == 1);

    // The catalog witness: min((a,b), (2a,2b)) leaves the line.
    const FunctionVec dir(s, {cls.a, cls.b});
    const FunctionVec doubled = Scalar(2) * dir;
    const FunctionVec mn = lattice_ops(dir, doubled).min;
    CHECK(member(dir, line));
    CHECK(member(doubled, line));
    CHECK_FALSE(member(mn, line));
  }
  CHECK(mixed_seen > 50);
}

TEST_CASE("exactly the three algebra lines are closed under squaring") {
  const SpacePtr s = spc(2);
  for (auto [a, b] : {std::pair{"1", "0"}, {"0", "1"}, {"1", "1"}}) {
    const Subspace line = sub(s, {{a, b}});
    const FunctionVec g = fv(s, {a, b});
    CHECK(member(product(g, g), line));
    CHECK(is_algebra_class(classify_pair(project_pair(line, "p0", "p1"))));
  }

  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 300; ++iter) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng);
    if (a == 0 || b == 0 || a == b) continue;
    const Subspace line = sub(s, {{to_string(a).c_str(), to_string(b).c_str()}});
    const FunctionVec g(s, {a, b});
    CHECK_FALSE(member(product(g, g), line));
  }
}
