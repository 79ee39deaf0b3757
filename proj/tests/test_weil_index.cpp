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
#include "metasym/errors.hpp"
#include "metasym/local_arith.hpp"
#include "metasym/weil_index.hpp"

using namespace metasym;

namespace {

// Classical quadratic Gauss sum: sum_x exp(-2 pi i u x^2 / p) = (u/p) eps_p sqrt(p)
// with eps_p = 1 for p = 1 mod 4 and -i for p = 3 mod 4 (conjugated).
EighthRoot gauss_sum_closed_form(long p, long u) {
  EighthRoot eps = p % 4 == 1 ? EighthRoot::one() : EighthRoot(6);
  return eps * legendre(u, p);
}

}  // namespace

TEST_CASE("eighth roots") {
  EighthRoot z(1);
  CHECK(z.pow(8) == EighthRoot::one());
  CHECK((z * z).to_string() == "i");
  CHECK(z.inverse().to_string() == "e^{-i*pi/4}");
  CHECK(EighthRoot(4).to_string() == "-1");
  CHECK(std::abs(z.value() - Complex(std::sqrt(0.5), std::sqrt(0.5))) < 1e-15);
  CHECK(snap_to_eighth_root(Complex(0, -1)).value.to_string() == "-i");
  CHECK_THROWS_AS(snap_to_eighth_root(Complex(0.5, 0.5)), ConsistencyError);
}

TEST_CASE("additive characters") {
  AdditiveCharacter real(LocalPlace::real());
  CHECK(std::abs(real(Rational(1, 4)) - Complex(0, 1)) < 1e-12);
  AdditiveCharacter p3(LocalPlace::finite(3));
  // psi(x) = exp(-2 pi i {x}_3)
  CHECK(std::abs(p3(Rational(1, 3)) - std::exp(Complex(0, -2 * M_PI / 3))) < 1e-12);
  CHECK(std::abs(p3(5) - Complex(1, 0)) < 1e-12);
  CHECK(padic_fractional_part(Rational(7, 9), 3) == Rational(7, 9));
  CHECK(padic_fractional_part(Rational(10, 3), 3) == Rational(1, 3));
  CHECK_THROWS_AS(AdditiveCharacter(LocalPlace::finite(2)), UnsupportedDomainError);
  CHECK_THROWS_AS(AdditiveCharacter(LocalPlace::real(), 0), DomainError);
}

TEST_CASE("gamma matches the classical Gauss sum evaluation") {
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    long u = least_nonresidue(p);
    for (long unit : {1L, u}) {
      CAPTURE(p);
      CAPTURE(unit);
      CHECK(gamma(AdditiveCharacter(LocalPlace::finite(p), unit)) == EighthRoot::one());
      CHECK(gamma(AdditiveCharacter(LocalPlace::finite(p), p * unit)) == gauss_sum_closed_form(p, unit));
    }
  }
}

TEST_CASE("gamma reference values") {
  CHECK(gamma(AdditiveCharacter(LocalPlace::finite(3), 3)).to_string() == "-i");
  CHECK(gamma(AdditiveCharacter(LocalPlace::finite(3), 6)).to_string() == "i");
  CHECK(gamma(AdditiveCharacter(LocalPlace::finite(5), 10)).to_string() == "-1");
  CHECK(gamma(AdditiveCharacter(LocalPlace::finite(7), 7)).to_string() == "-i");
  CHECK(gamma(AdditiveCharacter(LocalPlace::real())).to_string() == "e^{i*pi/4}");
  CHECK(gamma(AdditiveCharacter(LocalPlace::real(), -3)).to_string() == "e^{-i*pi/4}");
  CHECK(mu(-1, AdditiveCharacter(LocalPlace::real())).to_string() == "-i");
}

TEST_CASE("oracles are close to the snapped values") {
  CHECK(gamma_with_residual(AdditiveCharacter(LocalPlace::real(), 2)).residual < 1e-9);
  auto deep = snap_to_eighth_root(gauss_shell_oracle(5, 10, 3));
  CHECK(deep.value == gamma(AdditiveCharacter(LocalPlace::finite(5), 10)));
  CHECK(std::abs(fresnel_oracle(Rational(1, 2)) - EighthRoot(1).value()) < 1e-6);
  CHECK_THROWS_AS(gauss_shell_oracle(3, 1, 40), ResourceError);
  CHECK_THROWS_AS(gauss_shell_oracle(2, 1), UnsupportedDomainError);
}

TEST_CASE("mu is multiplicative up to the Hilbert symbol and depends on square classes") {
  for (long p : {3L, 5L, 7L, 11L, 13L, 0L}) {
    LocalPlace v = p ? LocalPlace::finite(p) : LocalPlace::real();
    AdditiveCharacter psi(v);
    auto reps = square_class_representatives(v);
    for (const auto& a : reps) {
      CHECK(mu(a * 4, psi) == mu(a, psi));
      for (const auto& b : reps) CHECK(mu_multiplicativity_check(a, b, psi));
    }
    CHECK(mu(-1, psi) * gamma(psi).pow(2) == EighthRoot::one());
  }
  CHECK_THROWS_AS(mu(0, AdditiveCharacter(LocalPlace::real())), DomainError);
}
