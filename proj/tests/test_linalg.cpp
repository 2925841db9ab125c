/*
   Copyright 2026 The dalg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include "dalg/linalg.hpp"
#include "oracle.hpp"

using namespace dalg;

namespace {

RationalMatrix M(std::vector<std::vector<long>> rows) {
  std::vector<RationalVector> r;
  for (const auto& row : rows) {
    RationalVector v;
    for (long x : row) v.emplace_back(x);
    r.push_back(std::move(v));
  }
  return RationalMatrix::from_rows(r);
}

RationalVector V(std::vector<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("kernel") {
  CHECK(kernel(RationalMatrix::identity(3)).dimension() == 0);
  KernelBasis z = kernel(RationalMatrix(2, 3));
  CHECK(z.dimension() == 3);
  CHECK(z.vectors[0] == V({1, 0, 0}));
  KernelBasis k = kernel(M({{1, 1}}));
  REQUIRE(k.dimension() == 1);
  CHECK(k.vectors[0] == V({1, -1}));
}

TEST_CASE("kernel basis is in reduced echelon form") {
  const RationalMatrix m = M({{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 0, 1, 1}});
  KernelBasis k = kernel(m);
  REQUIRE(k.dimension() == 2);
  CHECK(k.vectors[0] == V({1, 0, 1, -1}));
  CHECK(k.vectors[1] == V({0, 1, 2, -2}));
  for (const auto& v : k.vectors) CHECK(multiply(m, v) == V({0, 0, 0}));
}

TEST_CASE("solve") {
  SUBCASE("identity") {
    auto s = solve(RationalMatrix::identity(3), V({4, 5, 6}));
    REQUIRE(s);
    CHECK(s->particular == V({4, 5, 6}));
    CHECK(s->homogeneous.dimension() == 0);
  }
  SUBCASE("underdetermined") {
    auto s = solve(M({{1, 1}}), V({2}));
    REQUIRE(s);
    CHECK(s->particular == V({2, 0}));
    REQUIRE(s->homogeneous.dimension() == 1);
    CHECK(s->homogeneous.vectors[0] == V({1, -1}));
  }
  SUBCASE("inconsistent") { CHECK_FALSE(solve(M({{1}, {1}}), V({1, 2}))); }
  SUBCASE("rational entries") {
    RationalMatrix m(2, 2);
    m(0, 0) = make_rational(1, 2);
    m(0, 1) = make_rational(1, 3);
    m(1, 0) = make_rational(1, 4);
    m(1, 1) = make_rational(1, 5);
    const RationalVector b{Rational(1), Rational(2)};
    auto s = solve(m, b);
    REQUIRE(s);
    CHECK(multiply(m, s->particular) == b);
  }
  CHECK_THROWS_AS(solve(M({{1, 1}}), V({1, 2})), std::invalid_argument);
}

TEST_CASE("rank, determinant and inverse") {
  CHECK(rank(M({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(RationalMatrix(0, 0)) == 0);
  CHECK(determinant(M({{2, 0, 1}, {1, 3, 2}, {1, 1, 2}})) == 6);
  CHECK(determinant(M({{2, 0, 1}, {1, 3, 2}, {1, 1, 1}})) == 0);
  CHECK(determinant(M({{1, 2}, {2, 4}})) == 0);
  CHECK(determinant(M({{0, 1}, {1, 0}})) == -1);
  auto inv = inverse(M({{2, 1}, {1, 1}}));
  REQUIRE(inv);
  CHECK(*inv == M({{1, -1}, {-1, 2}}));
  CHECK_FALSE(inverse(M({{1, 2}, {2, 4}})));
  const SolveReport r = solve_with_rank(M({{1, 2}, {2, 4}}), V({1, 3}));
  CHECK(r.rank == 1);
  CHECK_FALSE(r.solution);
}

TEST_CASE("rank agrees with the column-pivoted oracle") {
  const RationalMatrix m = M({{3, -1, 4, 1}, {5, 9, -2, 6}, {8, 8, 2, 7}, {0, 0, 0, 0}});
  oracle::Dense d;
  for (std::size_t i = 0; i < m.rows(); ++i) d.emplace_back(m.row(i).begin(), m.row(i).end());
  CHECK(rank(m) == oracle::rank(d));
  CHECK(rank(m) + kernel(m).dimension() == m.cols());
}
