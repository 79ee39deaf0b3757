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
#include "metasym/local_arith.hpp"
#include "metasym/oracles.hpp"
#include "support.hpp"

using namespace metasym;

TEST_CASE("valuations and units") {
  CHECK(valuation(12, 2) == 2);
  CHECK(valuation(Rational(1, 9), 3) == -2);
  auto [v, u] = valuation_and_unit(Rational(-50, 3), 5);
  CHECK(v == 2);
  CHECK(u == Rational(-2, 3));
  CHECK_THROWS_AS(valuation(0, 3), DomainError);
  CHECK_THROWS_AS(valuation(5, 4), DomainError);
}

TEST_CASE("Legendre symbol against Euler's criterion") {
  for (long p : {3L, 5L, 7L, 11L, 13L, 101L})
    for (long a = 1; a < p; ++a) {
      Integer e;
      mpz_powm_ui(e.get_mpz_t(), Integer(a).get_mpz_t(), static_cast<unsigned long>((p - 1) / 2), Integer(p).get_mpz_t());
      CHECK(legendre(a, p).value() == (e == 1 ? 1 : -1));
    }
  CHECK_THROWS_AS(legendre(3, 3), DomainError);
  CHECK_THROWS_AS(legendre(3, 2), DomainError);
  CHECK(least_nonresidue(7) == 3);
  CHECK(least_nonresidue(17) == 3);
}

TEST_CASE("places") {
  CHECK(LocalPlace::parse("inf").is_real());
  CHECK(LocalPlace::parse("7") == LocalPlace::finite(7));
  CHECK(LocalPlace::finite(3).is_odd_finite());
  CHECK_FALSE(LocalPlace::finite(2).is_odd_finite());
  CHECK_THROWS_AS(LocalPlace::parse("x"), DataError);
  CHECK_THROWS_AS(LocalPlace::finite(9), DomainError);
}

TEST_CASE("Hilbert symbol reference values") {
  CHECK(hilbert(-1, -1, LocalPlace::real()) == Sign::minus());
  CHECK(hilbert(-1, -1, LocalPlace::finite(2)) == Sign::minus());
  CHECK(hilbert(-1, -1, LocalPlace::finite(3)) == Sign::plus());
  CHECK(hilbert(2, 5, LocalPlace::finite(5)) == Sign::minus());
  CHECK(hilbert(3, 3, LocalPlace::finite(3)) == Sign::minus());
  CHECK(hilbert(2, 2, LocalPlace::finite(2)) == Sign::plus());
  CHECK(hilbert(3, 3, LocalPlace::finite(2)) == Sign::minus());
  CHECK_THROWS_AS(hilbert(0, 1, LocalPlace::real()), DomainError);
}

TEST_CASE("Hilbert symbol agrees with the solvability oracle") {
  for (const auto& v : {LocalPlace::finite(2), LocalPlace::finite(3), LocalPlace::finite(5), LocalPlace::finite(7),
                        LocalPlace::real()})
    for (const auto& a : testing::small_values())
      for (const auto& b : testing::small_values()) {
        CAPTURE(v.to_string());
        CHECK(hilbert(a, b, v) == hilbert_solvability_oracle(a, b, v));
      }
}

TEST_CASE("Hilbert symbol is symmetric, bilinear and kills norms") {
  for (const auto& v : {LocalPlace::finite(2), LocalPlace::finite(3), LocalPlace::real()}) {
    auto reps = square_class_representatives(v);
    for (const auto& a : reps) {
      CHECK(hilbert(a, -a, v) == Sign::plus());
      CHECK(hilbert(a, 1 - a == 0 ? Rational(1) : 1 - a, v) == Sign::plus());
      for (const auto& b : reps) {
        CHECK(hilbert(a, b, v) == hilbert(b, a, v));
        for (const auto& c : reps) CHECK(hilbert(a, b * c, v) == hilbert(a, b, v) * hilbert(a, c, v));
      }
    }
  }
}

TEST_CASE("reciprocity on seeded pairs") {
  testing::Sampler rng(42);
  for (int i = 0; i < 300; ++i) CHECK(reciprocity_product(rng.nonzero(80, 40), rng.nonzero(80, 40)) == Sign::plus());
}

TEST_CASE("square classes") {
  CHECK(square_class_representatives(LocalPlace::real()).size() == 2);
  CHECK(square_class_representatives(LocalPlace::finite(5)).size() == 4);
  CHECK(square_class_representatives(LocalPlace::finite(2)).size() == 8);
  CHECK(same_square_class(2, 8, LocalPlace::finite(3)));
  CHECK(same_square_class(7, 4, LocalPlace::finite(3)));
  CHECK_FALSE(same_square_class(2, 1, LocalPlace::finite(3)));
  CHECK(same_square_class(17, 1, LocalPlace::finite(2)));
  CHECK_FALSE(same_square_class(5, 1, LocalPlace::finite(2)));
  CHECK_FALSE(same_square_class(-1, 1, LocalPlace::real()));
}

TEST_CASE("relevant primes") {
  CHECK(relevant_primes({Rational(6, 35), -1}) == std::vector<long>{2, 3, 5, 7});
  CHECK(relevant_primes({1}) == std::vector<long>{2});
}
