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
#include "metasym/element_parser.hpp"
#include "metasym/errors.hpp"
#include "metasym/structured_element.hpp"

using namespace metasym;

TEST_CASE("determinant by elimination") {
  CHECK(determinant({{1, 2}, {3, 4}}) == -2);
  CHECK(determinant({{0, 1, 0}, {1, 0, 0}, {0, 0, Rational(1, 2)}}) == Rational(-1, 2));
  CHECK(determinant({{1, 2}, {2, 4}}) == 0);
  CHECK(matmul({{1, 1}, {0, 1}}, {{1, 2}, {0, 1}}) == Matrix{{1, 3}, {0, 1}});
}

TEST_CASE("constructors and queries") {
  auto t = StructuredElement::torus({2, 3, Rational(1, 5)});
  CHECK(t.rank() == 3);
  CHECK(t.det() == Rational(6, 5));
  CHECK(t.is_diagonal());
  CHECK_FALSE(t.is_central());
  CHECK(StructuredElement::central(7, 4).is_central());
  CHECK(StructuredElement::central(7, 4).det() == 2401);
  auto g = StructuredElement::gl2(1, 2, 3, 4);
  CHECK(g.blocks()[0].kind == Block::Kind::GL2);
  CHECK(StructuredElement::gl2(2, 1, 1, 1).blocks()[0].kind == Block::Kind::SL2);
  auto b = StructuredElement::block_diagonal({g, t});
  CHECK(b.rank() == 5);
  CHECK(b.block_sizes() == std::vector<int>{2, 3});
  CHECK(b.det() == g.det() * t.det());
  CHECK_THROWS_AS(StructuredElement::torus({1, 0}), DomainError);
  CHECK_THROWS_AS(StructuredElement::sl2(1, 1, 1, 1), DomainError);
  CHECK_THROWS_AS(StructuredElement::gl2(1, 2, 2, 4), DomainError);
  CHECK_THROWS_AS(StructuredElement::unipotent({{1, 0}, {1, 1}}), DomainError);
}

TEST_CASE("even torus and square determinants") {
  LocalPlace v = LocalPlace::finite(3);
  CHECK(StructuredElement::torus({2, 8, 5}).in_even_torus(v));
  CHECK_FALSE(StructuredElement::torus({2, 1}).in_even_torus(v));
  CHECK(StructuredElement::torus({7, 1}).in_even_torus(v));
  CHECK(StructuredElement::torus({3, 3}).has_square_det(v));
  CHECK_FALSE(StructuredElement::torus({3, 1}).has_square_det(v));
}

TEST_CASE("products and inverses") {
  auto g = StructuredElement::gl2(1, 2, 3, 4);
  auto h = StructuredElement::gl2(0, 1, -1, 5);
  CHECK((g * h).matrix() == matmul(g.matrix(), h.matrix()));
  CHECK((g * g.inverse()).matrix() == identity_matrix(2));
  auto t = StructuredElement::torus({2, 3});
  CHECK((t * t.inverse()) == StructuredElement::identity(2));
}

TEST_CASE("common segments refine both block structures") {
  auto g = StructuredElement::block_diagonal({StructuredElement::gl2(1, 2, 3, 4), StructuredElement::torus({5})});
  auto h = StructuredElement::torus({1, 2, 3});
  auto segs = common_segments(g, h);
  REQUIRE(segs.size() == 2);
  CHECK(segs[0].g.size() == 2);
  CHECK(segs[1].h == Matrix{{3}});
  auto k = StructuredElement::block_diagonal({StructuredElement::torus({1}), StructuredElement::gl2(1, 2, 3, 4)});
  CHECK_THROWS_AS(common_segments(g, k), UnsupportedDomainError);
}

TEST_CASE("element parser round trips") {
  for (const char* text : {"torus(2,-3,1/5)", "central(3,4)", "sl2(1,1,0,1)", "gl2(1,2,3,4)",
                           "blocks[gl2(1,2,3,4), torus(5)]", "unip(3; 1,2:1/2; 2,3:-1)"}) {
    CAPTURE(text);
    auto e = parse_element(text);
    CHECK(e.to_string() == text);
    CHECK(parse_element(e.to_string()) == e);
  }
  CHECK(parse_element("diag(1,2)") == StructuredElement::torus({1, 2}));
  CHECK(parse_element("id(3)") == StructuredElement::identity(3));
  CHECK(parse_element(" torus( 0.5 , 2 ) ").diagonal() == std::vector<Rational>{Rational(1, 2), 2});
}

TEST_CASE("element parser diagnostics") {
  CHECK_THROWS_AS(parse_element("torus(1,2"), DomainError);
  CHECK_THROWS_AS(parse_element("bogus(1)"), DomainError);
  CHECK_THROWS_AS(parse_element("sl2(1,2,3)"), DomainError);
  CHECK_THROWS_AS(parse_element("torus(1) extra"), DomainError);
  try {
    parse_element("gl2(1,2,x,4)");
    FAIL("expected a parse error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}
