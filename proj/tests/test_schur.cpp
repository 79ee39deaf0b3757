// Copyright 2026 The metasym Authors
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

#include "doctest.h"
#include "metasym/errors.hpp"
#include "metasym/partition.hpp"
#include "metasym/schur.hpp"
#include "support.hpp"

using namespace metasym;

TEST_CASE("partitions") {
  Partition p({3, 1, 0});
  CHECK(p.length() == 2);
  CHECK(p.size() == 4);
  CHECK_FALSE(p.is_even());
  CHECK(Partition({2, 2}).is_even());
  CHECK(p.padded(4) == std::vector<long>{3, 1, 0, 0});
  CHECK(p == Partition({3, 1}));
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
  CHECK_THROWS_AS(Partition({2, -1}), DomainError);
  CHECK_THROWS_AS(p.padded(1), DomainError);
  // p(n): 1, 1, 2, 3, 5, 7, 11, 15, 22
  const long counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (long n = 0; n <= 8; ++n) CHECK(partitions_of(n, 99).size() == static_cast<size_t>(counts[n]));
  CHECK(partitions_of(6, 2).size() == 4);
  CHECK(even_partitions_of(8, 2).size() == 3);
  CHECK(even_partitions_of(5, 3).empty());
}

TEST_CASE("Schur polynomial examples") {
  CHECK(schur_jt(Partition(), {2, 3}) == 1);
  // s_(2)(x, y) = x^2 + xy + y^2
  CHECK(schur_jt(Partition({2}), {2, 3}) == 19);
  // s_(2,2)(x, y) = x^2 y^2
  CHECK(schur_jt(Partition({2, 2}), {2, 3}) == 36);
  CHECK(schur_tableau_oracle(Partition({1}), {2, 3, 5}) == 10);
  CHECK(schur_tableau_oracle(Partition({1, 1}), {2, 3}) == 6);
  CHECK(schur_tableau_oracle(Partition({3, 1}), {1, 1, 1}) == 15);
  CHECK(count_tableaux(Partition({3, 1}), 3) == 15);
}

TEST_CASE("complete homogeneous polynomials") {
  CHECK(complete_homogeneous(0, {}) == 1);
  CHECK(complete_homogeneous(2, {1, 1, 1}) == 6);
  CHECK(complete_homogeneous(-1, {1}) == 0);
}

TEST_CASE("determinant and tableau algorithms agree") {
  testing::Sampler rng(31);
  for (long n = 0; n <= 8; ++n)
    for (size_t r = 1; r <= 4; ++r)
      for (const auto& lam : partitions_of(n, r)) {
        auto values = rng.nonzeros(r, 5, 4);
        CAPTURE(lam.to_string());
        CHECK(schur_jt(lam, values) == schur_tableau_oracle(lam, values));
      }
}

TEST_CASE("specialization and symmetry") {
  testing::Sampler rng(32);
  for (long n = 1; n <= 6; ++n)
    for (const auto& lam : partitions_of(n, 3)) {
      CHECK(schur_jt(lam, {1, 1, 1}) == count_tableaux(lam, 3));
      auto v = rng.nonzeros(3);
      CHECK(schur_jt(lam, v) == schur_jt(lam, {v[2], v[0], v[1]}));
    }
}

TEST_CASE("enumeration bounds") {
  CHECK_THROWS_AS(schur_tableau_oracle(Partition({11}), {1, 1}), ResourceError);
  CHECK_THROWS_AS(schur_tableau_oracle(Partition({1}), {1, 1, 1, 1, 1}), ResourceError);
  CHECK_THROWS_AS(schur_jt(Partition({1, 1, 1}), {1, 1}), DomainError);
}
