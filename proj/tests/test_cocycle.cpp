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
#include "metasym/cocycle.hpp"
#include "metasym/errors.hpp"
#include "support.hpp"

using namespace metasym;

namespace {
const std::vector<LocalPlace> kPlaces{LocalPlace::finite(3), LocalPlace::finite(5), LocalPlace::finite(7),
                                      LocalPlace::real()};
}

TEST_CASE("Kubota cocycle reference values") {
  LocalPlace v = LocalPlace::finite(3);
  Matrix w{{0, 1}, {-1, 0}};
  CHECK(kubota_x(w) == -1);
  CHECK(kubota_x({{2, 0}, {0, Rational(1, 2)}}) == Rational(1, 2));
  // s(w) s(w) = s(-1): (x(w)/x(-1), x(w)/x(-1)) = (1, 1) = 1 at every place
  CHECK(kubota_sl2(w, w, v) == Sign::plus());
  // diagonal pairs: (a_1, d_2)
  Matrix t{{3, 0}, {0, Rational(1, 3)}};
  CHECK(kubota_sl2(t, t, v) == hilbert(3, Rational(1, 3), v));
  CHECK(kubota_gl2({{3, 0}, {0, 1}}, {{1, 0}, {0, 3}}, v) == Sign::minus());
  CHECK_THROWS_AS(kubota_sl2({{2, 0}, {0, 1}}, w, v), PreconditionError);
}

TEST_CASE("sigma on tori is the product of cross Hilbert symbols") {
  testing::Sampler rng(3);
  for (const auto& v : kPlaces)
    for (int i = 0; i < 40; ++i) {
      auto t = rng.nonzeros(3), h = rng.nonzeros(3);
      Sign expect = hilbert(t[0], h[1], v) * hilbert(t[0], h[2], v) * hilbert(t[1], h[2], v);
      CHECK(sigma_eval(StructuredElement::torus(t), StructuredElement::torus(h), v) == expect);
    }
}

TEST_CASE("sigma is a normalized 2-cocycle") {
  testing::Sampler rng(4);
  for (const auto& v : kPlaces) {
    for (int i = 0; i < 60; ++i) {
      auto g = rng.gl2(), h = rng.gl2(), k = rng.gl2();
      CHECK(cocycle_identity_check(g, h, k, v));
      CHECK(sigma_eval(StructuredElement::identity(2), g, v) == Sign::plus());
    }
    auto reps = square_class_representatives(v);
    for (const auto& a : reps)
      for (const auto& b : reps)
        for (const auto& c : reps) {
          auto t1 = StructuredElement::torus({a, b, c}), t2 = StructuredElement::torus({c, a, b});
          CHECK(cocycle_identity_check(t1, t2, StructuredElement::torus({b, c, a}), v));
        }
  }
}

TEST_CASE("block diagonal pairs factor with determinant symbols") {
  testing::Sampler rng(5);
  for (const auto& v : kPlaces)
    for (int i = 0; i < 40; ++i) {
      auto g1 = rng.gl2(), h1 = rng.gl2();
      auto g2 = rng.torus(1), h2 = rng.torus(1);
      auto g = StructuredElement::block_diagonal({g1, g2});
      auto h = StructuredElement::block_diagonal({h1, h2});
      Sign expect = sigma_eval(g1, h1, v) * sigma_eval(g2, h2, v) * hilbert(g1.det(), h2.det(), v);
      CHECK(sigma_eval(g, h, v) == expect);
      CHECK(sigma_formula(g, h, v) == sigma_eval(g, h, v));
    }
}

TEST_CASE("even torus reduction") {
  testing::Sampler rng(6);
  for (const auto& v : kPlaces)
    for (size_t r = 2; r <= 5; ++r)
      for (int i = 0; i < 20; ++i) {
        auto t = rng.even_torus(r), h = rng.even_torus(r);
        CHECK(sigma_torus_even_reduced(t, h, v) == sigma_eval(t, h, v));
      }
  CHECK_THROWS_AS(sigma_torus_even_reduced(StructuredElement::torus({2, 1}), StructuredElement::torus({1, 1}),
                                           LocalPlace::finite(3)),
                  PreconditionError);
}

TEST_CASE("center exponent r(r-1)/2") {
  for (const auto& v : kPlaces) {
    auto reps = square_class_representatives(v);
    for (int r = 1; r <= 5; ++r)
      for (const auto& a : reps)
        for (const auto& b : reps) {
          auto s = sigma_eval(StructuredElement::central(a, r), StructuredElement::central(b, r), v);
          CHECK(s == hilbert(a, b, v).pow(r * (r - 1) / 2));
          CHECK(s == sigma_eval(StructuredElement::central(b, r), StructuredElement::central(a, r), v));
        }
  }
}

TEST_CASE("unipotent elements split") {
  testing::Sampler rng(7);
  for (const auto& v : kPlaces)
    for (int i = 0; i < 20; ++i) {
      auto n = rng.unipotent(4);
      auto t = rng.torus(4);
      CHECK(sigma_eval(n, t, v) == Sign::plus());
      CHECK(sigma_eval(t, n, v) == Sign::plus());
    }
}

TEST_CASE("product over all places is trivial") {
  testing::Sampler rng(8);
  for (int i = 0; i < 200; ++i) {
    CHECK(global_sigma_product(rng.gl2(), rng.gl2()) == Sign::plus());
    CHECK(global_sigma_product(rng.torus(4), rng.torus(4)) == Sign::plus());
  }
}

TEST_CASE("block lemmas") {
  LocalPlace v = LocalPlace::finite(3);
  auto g = StructuredElement::sl2(1, 2, 0, 1);
  auto h = StructuredElement::torus({4});
  CHECK(block_lemmas_check({2, 1}, 0, 1, g, h, v));
  CHECK(block_commutation_holds({1, 1}, 0, 1, StructuredElement::torus({3}), StructuredElement::torus({4}), v));
  CHECK_FALSE(block_commutation_holds({1, 1}, 0, 1, StructuredElement::torus({3}), StructuredElement::torus({3}), v));
  CHECK_THROWS_AS(block_lemmas_check({1, 1}, 0, 1, StructuredElement::torus({3}), h, v), PreconditionError);
  CHECK_THROWS_AS(block_lemmas_check({2, 1}, 0, 0, g, g, v), DomainError);
  CHECK(embed_block({2, 1}, 1, h).matrix() == Matrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 4}});
}

TEST_CASE("cover multiplication is associative") {
  testing::Sampler rng(9);
  LocalPlace v = LocalPlace::finite(5);
  for (int i = 0; i < 30; ++i) {
    CoverElement a{rng.gl2(), Sign::plus()}, b{rng.gl2(), Sign::minus()}, c{rng.gl2(), Sign::plus()};
    auto left = cover_multiply(cover_multiply(a, b, v), c, v);
    auto right = cover_multiply(a, cover_multiply(b, c, v), v);
    CHECK(left.element == right.element);
    CHECK(left.xi == right.xi);
  }
}

TEST_CASE("unsupported places") {
  auto t = StructuredElement::torus({2, 3});
  CHECK_THROWS_AS(sigma_eval(t, t, LocalPlace::finite(2)), UnsupportedDomainError);
  CHECK_NOTHROW(sigma_formula(t, t, LocalPlace::finite(2)));
}
