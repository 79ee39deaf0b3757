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
#include "metasym/rational.hpp"
#include "metasym/series.hpp"

using namespace metasym;

TEST_CASE("parse_rational reads fractions and decimals exactly") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational(" -0.25 ") == Rational(-1, 4));
  CHECK(parse_rational("+7") == 7);
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
  CHECK(parse_rational_list("1,2/3,-4") == std::vector<Rational>{1, Rational(2, 3), -4});
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), DataError);
  CHECK_THROWS_AS(parse_rational("1/0"), DataError);
  CHECK_THROWS_AS(parse_rational("abc"), DataError);
  CHECK_THROWS_AS(parse_rational("1.2.3"), DataError);
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);
}

TEST_CASE("powers and squares") {
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow(Rational(-2), 3) == -8);
  CHECK(pow(Rational(5), 0) == 1);
  CHECK_THROWS_AS(pow(Rational(0), -1), DomainError);
  CHECK(is_rational_square(Rational(9, 4)));
  CHECK_FALSE(is_rational_square(2));
  CHECK_FALSE(is_rational_square(-4));
  CHECK(rational_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK_THROWS_AS(rational_sqrt(3), DomainError);
}

TEST_CASE("truncated series arithmetic") {
  // (1 - X)^{-1} = 1 + X + X^2 + ...
  auto inv = TruncatedSeries::from_polynomial({1, -1}, 5).inverse();
  for (int i = 0; i <= 5; ++i) CHECK(inv[i] == 1);
  // squared: coefficients i + 1
  auto sq = inv * inv;
  for (int i = 0; i <= 5; ++i) CHECK(sq[i] == i + 1);
  CHECK(inv.pow(2) == sq);
  CHECK(sq.to_string() == "[1, 2, 3, 4, 5, 6]");
  CHECK_THROWS_AS(TruncatedSeries::from_polynomial({0, 1}, 3).inverse(), DomainError);
  CHECK_THROWS_AS(inv + TruncatedSeries(4), DomainError);
}

TEST_CASE("polynomial product and rendering") {
  Polynomial p = poly_mul({1, -1}, {1, -1});
  CHECK(p == Polynomial{1, -2, 1});
  CHECK(poly_to_string(p) == "1 - 2*X + X^2");
  CHECK(poly_trim({1, 0, 0}) == Polynomial{1});
}
