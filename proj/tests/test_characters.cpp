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

#include <cmath>

#include "doctest.h"
#include "metasym/characters.hpp"
#include "metasym/errors.hpp"
#include "support.hpp"

using namespace metasym;

TEST_CASE("unramified characters") {
  UnramifiedCharacter chi(Rational(1, 2), Sign::minus());
  LocalPlace p3 = LocalPlace::finite(3);
  CHECK(chi(9, p3).scale == Rational(1, 4));
  CHECK(chi(Rational(2, 3), p3).scale == 2);
  CHECK(chi(-5, LocalPlace::real()).root == EighthRoot(4));
  CHECK(chi(5, LocalPlace::real()).root == EighthRoot::one());
  CHECK_THROWS_AS(UnramifiedCharacter(0), DomainError);
  CHECK_THROWS_AS(chi(0, p3), DomainError);
}

TEST_CASE("torus character is genuine on the even torus") {
  testing::Sampler rng(11);
  for (long p : {3L, 5L, 7L, 0L}) {
    LocalPlace v = p ? LocalPlace::finite(p) : LocalPlace::real();
    AdditiveCharacter psi(v);
    UnramifiedCharacter chi(3, Sign::minus());
    for (size_t r = 2; r <= 5; ++r)
      for (int i = 0; i < 10; ++i)
        CHECK(torus_character_check(rng.even_torus(r), rng.even_torus(r), Sign::plus(), Sign::minus(), chi, psi));
  }
  CHECK_THROWS_AS(omega_chi_psi(StructuredElement::torus({2, 1}), Sign::plus(), UnramifiedCharacter(),
                                AdditiveCharacter(LocalPlace::finite(3))),
                  PreconditionError);
}

TEST_CASE("omega_chi_psi reference value") {
  AdditiveCharacter psi(LocalPlace::real());
  // t = diag(-1, -1): mu(-1) = -i, chi(det) = 1
  auto t = StructuredElement::torus({-1, -1});
  CHECK(omega_chi_psi(t, Sign::plus(), UnramifiedCharacter(), psi).to_string() == "-i");
  CHECK(omega_chi_psi(t, Sign::minus(), UnramifiedCharacter(), psi).to_string() == "i");
  // the psi_a variant inverts mu: with a = 1 it is the conjugate of the above
  CHECK(omega_chi_psi_a(t, Sign::plus(), UnramifiedCharacter(), psi, 1).to_string() == "i");
}

TEST_CASE("central characters are genuine") {
  for (long p : {3L, 5L, 0L}) {
    LocalPlace v = p ? LocalPlace::finite(p) : LocalPlace::real();
    AdditiveCharacter psi(v);
    UnramifiedCharacter chi(2, Sign::minus()), eta(Rational(1, 3), Sign::plus());
    auto reps = square_class_representatives(v);
    for (auto kind : {CentralKind::Odd, CentralKind::EvenSquare, CentralKind::MQEven, CentralKind::MQOdd})
      for (int q = 1; q <= 3; ++q)
        for (const auto& a : reps)
          for (const auto& b : reps) CHECK(central_character_check(kind, a, b, q, chi, eta, psi));
  }
  CHECK(central_rank(CentralKind::Odd, 2) == 5);
  CHECK(central_rank(CentralKind::MQEven, 2) == 4);
}

TEST_CASE("nilpotent characters") {
  AdditiveCharacter psi(LocalPlace::real());
  Matrix n = identity_matrix(4);
  n[0][1] = Rational(1, 8);
  n[1][2] = Rational(1, 4);
  n[2][3] = Rational(1, 2);
  auto u = StructuredElement::unipotent(n);
  auto e = [](double turns) { return std::exp(Complex(0, 2 * M_PI * turns)); };
  // x_{34} + x_{12}
  CHECK(std::abs(nilpotent_char_eval(NilpotentKind::SemiWhittaker, u, psi) - e(0.625)) < 1e-12);
  // 2 x_{12} + x_{23} + x_{34}
  CHECK(std::abs(nilpotent_char_eval(NilpotentKind::PsiNa, u, psi, {2}) - e(1.0)) < 1e-12);
  // 3 x_{12} + 5 x_{34}
  CHECK(std::abs(nilpotent_char_eval(NilpotentKind::PsiTuple, u, psi, {3, 5}) - e(2.875)) < 1e-12);
  CHECK_THROWS_AS(nilpotent_char_eval(NilpotentKind::PsiNa, u, psi, {}), DomainError);
  CHECK_THROWS_AS(nilpotent_char_eval(NilpotentKind::PsiTuple, u, psi, {1, 1, 1}), DomainError);
  CHECK_THROWS_AS(nilpotent_char_eval(NilpotentKind::SemiWhittaker, StructuredElement::torus({2, 1, 1, 1}), psi),
                  PreconditionError);
}
